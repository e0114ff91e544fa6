import pytest
from hypothesis import given

from gfmzv import hopf, maps
from gfmzv.hopf import Rule
from gfmzv.words import B, X, Y, Poly, depth, enumerate_words, parse_poly, weight
from strategies import b0_free_words, polys, words


def tau_oracle(w):
    """Cut before every nonzero letter, record (k, m), reverse and swap k-1 <-> m."""
    blocks = []
    for a in w:
        if a:
            blocks.append([a, 0])
        else:
            blocks[-1][1] += 1
    out = []
    for k, m in reversed(blocks):
        out += [m + 1] + [0] * (k - 1)
    return tuple(out)


def p(text):
    return parse_poly(text)


def test_tau_examples():
    assert maps.tau_word((1, 0)) == (2,)
    assert maps.tau_word((2,)) == (1, 0)
    assert maps.tau_word((2, 0, 3)) == (1, 0, 0, 2, 0)
    with pytest.raises(ValueError):
        maps.tau_word((0, 1))


@given(b0_free_words(8))
def test_tau_matches_block_oracle_and_is_involution(w):
    t = maps.tau_word(w)
    assert t == tau_oracle(w)
    assert maps.tau_word(t) == w
    assert weight(t) == weight(w) and depth(t) == depth(w)


def test_projection_examples():
    assert maps.pi0(p("b0.b1")) == 0
    assert maps.pi0(p("b1.b0")) == p("b1.b0")
    assert maps.pi0(Poly.one(B)) == Poly.one(B)
    assert maps.piY(p("x0.x1")) == p("y2")
    assert maps.piY(p("x1.x0")) == 0
    assert maps.piY(p("x1.x0.x1")) == p("y1.y2")


def test_embedding_examples():
    assert maps.iota(p("y2")) == p("x0.x1")
    assert maps.iota(p("y1.y1")) == p("x1.x1")
    assert maps.iota(p("y3.y1")) == p("x0.x0.x1.x1")
    assert maps.theta_X_anti(p("x0.x0.x1")) == p("b1.b0.b0")
    assert maps.theta_Y(p("y2.y3")) == p("b2.b3")
    assert maps.theta_X(p("x0.x1")) == p("b0.b1")
    assert maps.project_to_X(p("b0.b1")) == p("x0.x1")
    assert maps.project_to_X(p("b2")) == 0
    assert maps.project_to_Y(p("b1.b0")) == 0


@given(words(Y, 6))
def test_iota_is_a_section_of_piY(y):
    assert maps.piY(maps.iota(Poly.word(Y, y))) == Poly.word(Y, y)


@given(polys(X, 5))
def test_theta_inverses(q):
    assert maps.project_to_X(maps.theta_X(q)) == q


def test_theta_X_respects_products_without_b1_merges():
    ws = [w for n in range(4) for w in enumerate_words(X, n)]
    for u in ws:
        for v in ws:
            lhs = maps.theta_X(hopf.quasi_shuffle(u, v, Rule.SHUFFLE))
            rhs = hopf.qsh_poly(maps.theta_X(Poly.word(X, u)), maps.theta_X(Poly.word(X, v)), Rule.BALANCED)
            if 1 not in u or 1 not in v:
                assert lhs == rhs
            else:
                assert any(2 in w for w in (rhs - lhs).words())


@pytest.mark.parametrize("n", range(7))
def test_tau_pi0_theta_anti_equals_theta_Y_piY(n):
    for w in enumerate_words(X, n):
        q = Poly.word(X, w)
        assert maps.tau(maps.pi0(maps.theta_X_anti(q))) == maps.theta_Y(maps.piY(q))
