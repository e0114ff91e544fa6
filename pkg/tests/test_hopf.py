from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfmzv import hopf
from gfmzv.hopf import Rule
from gfmzv.words import B, X, Y, Poly, Series, exp_conc, parse_poly, weight, words_up_to
from strategies import rationals, words


def merge_allowed(rule, i, j):
    if rule is Rule.SHUFFLE:
        return False
    if rule is Rule.BALANCED:
        return i > 0 and j > 0
    return True


def brute_quasi_shuffle(u, v, rule):
    """Sum over jointly surjective order-preserving placements of u and v into n slots."""
    out = {}
    for n in range(max(len(u), len(v)), len(u) + len(v) + 1):
        for pu in combinations(range(n), len(u)):
            for pv in combinations(range(n), len(v)):
                if set(pu) | set(pv) != set(range(n)):
                    continue
                word, ok = [], True
                for k in range(n):
                    a = u[pu.index(k)] if k in pu else None
                    b = v[pv.index(k)] if k in pv else None
                    if a is not None and b is not None:
                        if not merge_allowed(rule, a, b):
                            ok = False
                            break
                        word.append(a + b)
                    else:
                        word.append(a if a is not None else b)
                if ok:
                    out[tuple(word)] = out.get(tuple(word), 0) + 1
    return Poly(rule.alphabet, out)


def quasisym(w, xs):
    """Monomial quasi-symmetric function M_w evaluated at xs."""
    total = Fraction(0)
    for idx in combinations(range(len(xs)), len(w)):
        t = Fraction(1)
        for i, a in zip(idx, w):
            t *= xs[i] ** a
        total += t
    return total


def test_product_examples():
    assert hopf.quasi_shuffle((1,), (1,), Rule.BALANCED) == parse_poly("2*b1.b1 + b2")
    assert hopf.quasi_shuffle((0,), (0,), Rule.BALANCED) == parse_poly("2*b0.b0")
    assert hopf.quasi_shuffle((1,), (0, 1), Rule.SHUFFLE) == parse_poly("x1.x0.x1 + 2*x0.x1.x1")
    assert hopf.quasi_shuffle((1,), (2,), Rule.STUFFLE) == parse_poly("y1.y2 + y2.y1 + y3")


@pytest.mark.parametrize("rule", list(Rule))
def test_product_matches_placement_oracle(rule):
    ws = words_up_to(rule.alphabet, 4)
    for u in ws:
        for v in ws:
            if weight(u, rule.alphabet) + weight(v, rule.alphabet) <= 5:
                assert hopf.quasi_shuffle(u, v, rule) == brute_quasi_shuffle(u, v, rule), (u, v)


@given(words(Y, 4), words(Y, 4))
def test_stuffle_matches_quasisymmetric_evaluation(u, v):
    xs = [Fraction(1, 2), Fraction(-2, 3), Fraction(3), Fraction(5, 7), Fraction(-1), Fraction(2, 9), Fraction(4)]
    xs = xs[: len(u) + len(v) + 1]
    lhs = quasisym(u, xs) * quasisym(v, xs)
    rhs = sum((c * quasisym(w, xs) for w, c in hopf.quasi_shuffle(u, v, Rule.STUFFLE).items()), Fraction(0))
    assert lhs == rhs


@pytest.mark.parametrize("rule", list(Rule))
@given(data=st.data())
def test_product_commutative_associative(rule, data):
    al = rule.alphabet
    u, v, t = (data.draw(words(al, 3)) for _ in range(3))
    assert hopf.quasi_shuffle(u, v, rule) == hopf.quasi_shuffle(v, u, rule)
    left = hopf.qsh_poly(hopf.quasi_shuffle(u, v, rule), Poly.word(al, t), rule)
    right = hopf.qsh_poly(Poly.word(al, u), hopf.quasi_shuffle(v, t, rule), rule)
    assert left == right


def test_deconcatenation_examples():
    d = hopf.delta_dec((2, 3))
    assert d.coeff((), (2, 3)) == d.coeff((2,), (3,)) == d.coeff((2, 3), ()) == 1 and len(d) == 3
    assert hopf.delta_dec(()).coeff((), ()) == 1
    assert len(hopf.delta_dec((1,))) == 2


def test_dual_coproduct_examples():
    d = hopf.delta_dual((3,), Rule.BALANCED)
    assert len(d) == 4 and all(d.coeff(u, v) == 1 for u, v in [((), (3,)), ((3,), ()), ((1,), (2,)), ((2,), (1,))])
    d0 = hopf.delta_dual((0,), Rule.BALANCED)
    assert len(d0) == 2
    dx = hopf.delta_dual((0, 1), Rule.SHUFFLE)
    assert len(dx) == 4 and dx.coeff((0,), (1,)) == dx.coeff((1,), (0,)) == 1


@pytest.mark.parametrize("rule", list(Rule))
def test_duality_against_placement_oracle(rule):
    al = rule.alphabet
    ws = words_up_to(al, 4)
    for u in ws:
        for v in ws:
            if weight(u, al) + weight(v, al) > 4:
                continue
            for w, c in brute_quasi_shuffle(u, v, rule).items():
                assert hopf.delta_dual(w, rule).coeff(u, v) == c


def test_duality_checker():
    assert hopf.pairing_dual_check(4, Rule.BALANCED)
    assert hopf.pairing_dual_check(4, Rule.STUFFLE)
    assert hopf.pairing_dual_check(0, Rule.BALANCED)


def test_antipode_examples():
    assert hopf.antipode_b((0,)) == parse_poly("-1*b0")
    assert hopf.antipode_b((2,)) == parse_poly("b1.b1 - b2")
    assert hopf.antipode_b((1, 0)) == parse_poly("b0.b1")


@given(words(B, 5))
def test_antipode_closed_form_matches_recursion(w):
    assert hopf.antipode_b(w) == hopf.antipode_recursive(w, Rule.BALANCED)
    assert not hopf.antipode_defect(w)
    assert not hopf.coassociativity_defect(w, Rule.BALANCED)


@given(words(B, 3), words(B, 3))
def test_antipode_reverses_concatenation(u, v):
    su, sv = hopf.antipode_b(u), hopf.antipode_b(v)
    assert hopf.antipode_b(u + v) == sv * su


def test_grouplike_examples():
    assert hopf.is_grouplike(Series.one(B, 4), Rule.BALANCED)[0]
    ok, witness = hopf.is_grouplike(Series.one(B, 4) + Series.from_poly(parse_poly("b2"), 4), Rule.BALANCED)
    assert not ok and witness == ((1,), (1,))


@given(rationals)
def test_exponential_of_primitive_is_grouplike(c):
    assert hopf.is_primitive(Poly(B, {(1,): c}), 5, Rule.BALANCED)
    assert hopf.is_grouplike(exp_conc(Poly(B, {(1,): c}), 5), Rule.BALANCED)[0]
    assert hopf.is_grouplike(exp_conc(Poly(X, {(0,): c, (1,): 1}), 4), Rule.SHUFFLE)[0]
