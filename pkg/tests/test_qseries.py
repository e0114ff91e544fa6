from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.utilities.iterables import partitions

from gfmzv import maps, qseries
from gfmzv.qseries import (
    Partition, QSeries, bernoulli, beta, bi_eisenstein_depth1, bracket_g, divisor_sigma,
    eisenstein_derivative_check, gen_partition, q_derivative, qzeta_sz, span_dimension,
    stanley_conjugate_d2, sz_binomial_identity_check, sz_stuffle_check, sz_tau_invariance_check,
)
from strategies import b0_free_words


def brute_sz(s, N):
    """Direct enumeration of n_1 > ... > n_d > 0 with each factor expanded as a geometric series."""
    out = [Fraction(0)] * (N + 1)

    def factor(n, si):
        # q^{n s} / (1 - q^n)^s = sum_j C(j + s - 1, s - 1) q^{n (s + j)}
        if si == 0:
            return {0: 1}
        return {n * (si + j): comb(j + si - 1, si - 1) for j in range(N // n + 1) if n * (si + j) <= N}

    def rec(i, upper, acc):
        if i == len(s):
            for e, c in acc.items():
                out[e] += c
            return
        for n in range(upper - 1, 0, -1):
            nxt = {}
            for e1, c1 in acc.items():
                for e2, c2 in factor(n, s[i]).items():
                    if e1 + e2 <= N:
                        nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
            if nxt:
                rec(i + 1, n, nxt)

    rec(0, N + 1, {0: 1})
    return QSeries(out, N)


def partition_oracle(exponents, N):
    """Sum over integer partitions with exactly d distinct part sizes, via sympy's enumerator."""
    d = len(exponents)
    out = [Fraction(0)] * (N + 1)
    out[0] = Fraction(1 if d == 0 else 0)
    for n in range(1, N + 1):
        for mult in partitions(n):
            if len(mult) != d:
                continue
            us = sorted(mult, reverse=True)
            t = 1
            for (m, l), u in zip(exponents, us):
                t *= u ** m * mult[u] ** l
            out[n] += t
    return QSeries(out, N)


def test_sz_examples():
    assert qzeta_sz((1,), 6) == QSeries([0, 1, 2, 2, 3, 2, 4], 6)
    assert qzeta_sz((), 5) == QSeries.one(5)
    with pytest.raises(ValueError):
        qzeta_sz((0, 1), 5)


@pytest.mark.parametrize("s", [(1,), (2,), (3,), (1, 0), (2, 1), (2, 0, 1), (1, 1, 1), (3, 0, 0), (2, 2)])
def test_sz_against_enumeration(s):
    assert qzeta_sz(s, 25) == brute_sz(s, 25)


def test_sz_depth_one_counts_divisors():
    assert qzeta_sz((1,), 40) == QSeries([0] + [divisor_sigma(0, n) for n in range(1, 41)], 40)


def test_bracket_examples():
    assert bracket_g((2,), 4) == QSeries([0, 1, 3, 4, 7], 4)
    assert bracket_g((1,), 30) == qzeta_sz((1,), 30)
    assert bracket_g((1, 1), 5)[3] == 1


@pytest.mark.parametrize("k", range(1, 6))
def test_bracket_depth_one_divisor_sums(k):
    expected = [Fraction(0)] + [Fraction(divisor_sigma(k - 1, n), factorial(k - 1)) for n in range(1, 51)]
    assert bracket_g((k,), 50) == QSeries(expected, 50)


def test_partition_series_examples():
    assert gen_partition([], 10) == QSeries.one(10)
    assert gen_partition([(0, 0)], 20) == partition_oracle([(0, 0)], 20)


@pytest.mark.parametrize("exps", [[(0, 0)], [(1, 0)], [(0, 2)], [(0, 0), (0, 0)], [(1, 0), (0, 1)], [(2, 1), (0, 1)]])
def test_partition_series_against_sympy(exps):
    assert gen_partition(exps, 18) == partition_oracle(exps, 18)


def test_partition_series_conjugation_symmetry():
    assert gen_partition([(1, 0)], 30) == gen_partition([(0, 1)], 30)
    # length two: conjugation sends (u1, v1, u2, v2) to (v1 + v2, u2, v1, u1 - u2)
    lhs = gen_partition([(1, 0), (0, 0)], 30)
    rhs = qseries.partition_series(lambda lam: lam.v[0] + lam.v[1], 2, 30)
    assert lhs == rhs


@given(st.lists(st.integers(1, 7), max_size=8))
def test_conjugation_is_an_involution(parts):
    lam = Partition.from_parts(parts)
    mu = lam.conjugate()
    assert mu.size == lam.size and mu.conjugate() == lam
    if lam.length == 2:
        (a, b), (c, d) = stanley_conjugate_d2(lam.u[0], lam.v[0], lam.u[1], lam.v[1])
        assert mu == Partition((a, c), (b, d))


def test_tau_invariance_examples():
    assert sz_tau_invariance_check((2,), (0,), 50)
    assert sz_tau_invariance_check((1,), (1,), 50)
    assert sz_tau_invariance_check((2, 1), (1, 0), 40)
    assert qzeta_sz((2,), 50) == qzeta_sz((1, 0), 50)


@given(b0_free_words(5))
def test_tau_invariance_property(w):
    assert qzeta_sz(w, 25) == qzeta_sz(maps.tau_word(w), 25)


@pytest.mark.parametrize("k,m,N", [((1,), (0,), 30), ((2,), (1,), 30), ((1, 1), (0, 0), 25), ((2, 1), (0, 1), 20)])
def test_binomial_partition_identity(k, m, N):
    assert sz_binomial_identity_check(k, m, N)


@pytest.mark.parametrize("a,b", [((1,), (1,)), ((2,), (1, 0)), ((3,), (2, 1)), ((1, 0), (2, 1))])
def test_stuffle_products(a, b):
    assert sz_stuffle_check(a, b, 30)


def test_bernoulli():
    assert bernoulli(0) == 1 and bernoulli(1) == Fraction(-1, 2) and bernoulli(2) == Fraction(1, 6)
    for n in range(2, 20):
        b = sympy.bernoulli(n)
        assert bernoulli(n) == Fraction(int(b.p), int(b.q))
    assert beta(2) == Fraction(-1, 24) and beta(3) == 0
    assert beta(4) == Fraction(1, 1440)


def test_depth_one_eisenstein():
    g = bi_eisenstein_depth1(2, 0, 6)
    assert g == QSeries([Fraction(-1, 24), 1, 3, 4, 7, 6, 12], 6)
    # both boundary terms are active for k=1, m=0: -B_1/2 - B_1/2
    assert bi_eisenstein_depth1(1, 0, 10) == qzeta_sz((1,), 10) + QSeries.one(10).scale(Fraction(1, 2))
    with pytest.raises(ValueError):
        bi_eisenstein_depth1(2, 2, 5)


@pytest.mark.parametrize("k,m", [(3, 1), (4, 2), (5, 1), (6, 3), (4, 1)])
def test_eisenstein_derivative_relation(k, m):
    assert eisenstein_derivative_check(k, m, 40)


def test_q_derivative_examples():
    assert q_derivative(QSeries([0, 1], 1)) == QSeries([0, 1], 1)
    assert q_derivative(QSeries([5], 3)) == QSeries.zero(3)
    assert q_derivative(QSeries([0, 0, 1, 1], 3)) == QSeries([0, 0, 2, 3], 3)


def test_span_dimension_examples():
    N = 20
    assert span_dimension([QSeries.one(N), qzeta_sz((1,), N)]) == 2
    assert span_dimension([qzeta_sz((2,), N), qzeta_sz((1, 0), N)]) == 1
    assert span_dimension([]) == 0
    with pytest.raises(ValueError):
        span_dimension([QSeries.one(5), QSeries.one(6)])


coeffs = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=1, max_size=8)


@given(coeffs, coeffs)
def test_series_product_matches_polynomial_product(a, b):
    N = 7
    q = sympy.Symbol("q")
    pa = sum(sympy.Rational(c.numerator, c.denominator) * q ** i for i, c in enumerate(a))
    pb = sum(sympy.Rational(c.numerator, c.denominator) * q ** i for i, c in enumerate(b))
    prod = sympy.Poly(sympy.expand(pa * pb), q) if (pa * pb) != 0 else None
    expected = [Fraction(0)] * (N + 1)
    if prod is not None:
        for (e,), c in prod.terms():
            if e <= N:
                expected[e] = Fraction(int(c.p), int(c.q))
    assert QSeries(a, N) * QSeries(b, N) == QSeries(expected, N)


def test_series_text():
    assert repr(QSeries([0, 1, 2], 2)) == "q + 2*q^2 + O(q^3)"
