"""Truncated q-series with exact rational coefficients.

Schlesinger-Zudilin multiple q-zeta values, brackets, generating series of
partitions in Stanley coordinates, depth-1 bi-Eisenstein series and the
checks relating them to the formal layer.  All nested sums over strictly
decreasing indices go through one dynamic program (``nested_sum``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, Sequence

from .hopf import Rule, quasi_shuffle
from .linalg import rank
from .maps import from_blocks, tau_word


class QSeries:
    """``c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        order = len(coeffs) - 1 if order is None else order
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in list(coeffs)[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def from_sparse(cls, d: dict, order: int) -> "QSeries":
        cs = [Fraction(0)] * (order + 1)
        for n, c in d.items():
            if n <= order:
                cs[n] += c
        return cls(cs, order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _common(self, other: "QSeries") -> int:
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._common(other)
        return QSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other):
        n = self._common(other)
        return QSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries([c * a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        n = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return QSeries(out, n)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def __repr__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        parts.append(f"O(q^{self.order + 1})")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def q_derivative(f: QSeries) -> QSeries:
    """``q d/dq``: ``c_n -> n c_n``."""
    return QSeries([n * c for n, c in enumerate(f.coeffs)], f.order)


# ------------------------------------------------------------ nested sums

Factor = Callable[[int, int], dict]  # (index n, order N) -> {degree: coeff}


def nested_sum(factors: Sequence[Factor], N: int) -> QSeries:
    """``sum_{n_1 > ... > n_d > 0} prod_i F_i(n_i)`` truncated at q^N.

    Each ``F_i(n)`` is a sparse series; the outermost index runs up to N,
    which is enough when ``F_1(n)`` is divisible by ``q^n``.  Dynamic
    programming from the innermost index with prefix sums keeps the cost
    at ``O(d N^2 log N)`` for the sparse factors used here.
    """
    if not factors:
        return QSeries.one(N)
    # inner[n] = sum over n > n_{i+1} > ... of the inner product, as dense lists
    zero = [Fraction(0)] * (N + 1)
    inner = None
    for F in reversed(factors):
        level = []
        acc = list(zero)  # prefix sum over m < n of level terms
        prefix = [list(zero)]
        for n in range(1, N + 1):
            f = F(n, N)
            base = inner[n] if inner is not None else None
            term = list(zero)
            if base is None:
                for e, c in f.items():
                    if e <= N:
                        term[e] += c
            else:
                for e, c in f.items():
                    if e > N:
                        continue
                    for j in range(N + 1 - e):
                        b = base[j]
                        if b:
                            term[e + j] += c * b
            level.append(term)
            acc = [a + t for a, t in zip(acc, term)]
            prefix.append(acc)
        # prefix[n] = sum_{1 <= m <= n} level[m]; the next level needs m < n
        inner = [None] + [prefix[n - 1] for n in range(1, N + 1)]
        total = prefix[N]
    return QSeries(total, N)


def _sz_factor(s: int) -> Factor:
    def F(n, N):
        if s == 0:
            return {0: Fraction(1)}
        # q^{ns} / (1 - q^n)^s = sum_{r >= s} C(r-1, s-1) q^{nr}
        return {n * r: Fraction(comb(r - 1, s - 1)) for r in range(s, N // n + 1)}

    return F


def qzeta_sz(s: Sequence[int], N: int) -> QSeries:
    """``sum_{n_1 > ... > n_l > 0} prod q^{n_i s_i} / (1 - q^{n_i})^{s_i}``, ``s_1 >= 1``."""
    s = tuple(s)
    if any(x < 0 for x in s):
        raise ValueError("entries must be non-negative")
    if s and s[0] == 0:
        raise ValueError("s_1 = 0 gives a divergent series; need s_1 >= 1")
    return _qzeta_cached(s, N)


@lru_cache(maxsize=None)
def _qzeta_cached(s: tuple, N: int) -> QSeries:
    return nested_sum([_sz_factor(x) for x in s], N)


def bracket_g(k: Sequence[int], N: int) -> QSeries:
    """``g(k_1..k_d) = sum_{u_1>..>u_d>0, v_i>0} prod v_i^{k_i-1}/(k_i-1)! q^{sum u_i v_i}``."""
    if any(x < 1 for x in k):
        raise ValueError("bracket entries must be >= 1")

    def factor(kk):
        f = factorial(kk - 1)
        return lambda u, N_: {u * v: Fraction(v ** (kk - 1), f) for v in range(1, N_ // u + 1)}

    return nested_sum([factor(x) for x in k], N)


def gen_partition(exponents: Sequence[tuple], N: int) -> QSeries:
    """``sum over partitions ((u_i), (v_i)) of length d of prod u_i^{m_i} v_i^{l_i} q^{|lambda|}``.

    ``exponents`` is ``[(m_1, l_1), ..., (m_d, l_d)]``.
    """
    def factor(m, l):
        return lambda u, N_: {u * v: Fraction(u ** m * v ** l) for v in range(1, N_ // u + 1)}

    return nested_sum([factor(m, l) for m, l in exponents], N)


# ------------------------------------------------------------- partitions

@dataclass(frozen=True)
class Partition:
    """Partition in Stanley coordinates: distinct parts ``u_1 > ... > u_d`` with multiplicities ``v_i``."""

    u: tuple
    v: tuple

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise ValueError("parts and multiplicities differ in length")
        if any(a <= b for a, b in zip(self.u, self.u[1:])) or any(x <= 0 for x in self.u + self.v):
            raise ValueError("need u_1 > ... > u_d > 0 and v_i > 0")

    @property
    def size(self) -> int:
        return sum(a * b for a, b in zip(self.u, self.v))

    @property
    def length(self) -> int:
        return len(self.u)

    def parts(self) -> list:
        return [a for a, b in zip(self.u, self.v) for _ in range(b)]

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        counts: dict = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        us = tuple(sorted(counts, reverse=True))
        return cls(us, tuple(counts[a] for a in us))

    def conjugate(self) -> "Partition":
        ps = self.parts()
        n = ps[0] if ps else 0
        return Partition.from_parts([sum(1 for p in ps if p > i) for i in range(n)])


def partitions_of_length(d: int, N: int) -> Iterator[Partition]:
    """All partitions of size <= N with exactly d distinct parts (brute force)."""

    def rec(prefix_u, prefix_v, remaining, max_part, left):
        if left == 0:
            yield Partition(tuple(prefix_u), tuple(prefix_v))
            return
        # the smallest possible completion uses parts left-1, ..., 1 once each
        for u in range(max_part, left - 1, -1):
            need = (left - 1) * left // 2
            for v in range(1, (remaining - need) // u + 1):
                yield from rec(prefix_u + [u], prefix_v + [v], remaining - u * v, u - 1, left - 1)

    if d == 0:
        yield Partition((), ())
        return
    yield from rec([], [], N, N, d)


def partition_series(fn: Callable[[Partition], object], d: int, N: int) -> QSeries:
    """``sum_{lambda of length d} fn(lambda) q^{|lambda|}`` by enumeration."""
    out = [Fraction(0)] * (N + 1)
    for lam in partitions_of_length(d, N):
        out[lam.size] += Fraction(fn(lam))
    return QSeries(out, N)


def stanley_conjugate_d2(u1, v1, u2, v2) -> tuple:
    """Conjugation of a length-2 partition in Stanley coordinates."""
    return (v1 + v2, u2), (v1, u1 - u2)


# ------------------------------------------------------------ checks

def sz_word(k: Sequence[int], m: Sequence[int]) -> tuple:
    """``b_{k_1} b_0^{m_1} ... b_{k_d} b_0^{m_d}`` as a letter tuple."""
    if len(k) != len(m) or any(x < 1 for x in k) or any(x < 0 for x in m):
        raise ValueError("need equal lengths, k_i >= 1, m_i >= 0")
    return from_blocks(zip(k, m))


def sz_tau_invariance_check(k: Sequence[int], m: Sequence[int], N: int) -> bool:
    w = sz_word(k, m)
    return qzeta_sz(w, N) == qzeta_sz(tau_word(w), N)


def sz_binomial_expansion(k: Sequence[int], m: Sequence[int], N: int) -> QSeries:
    """Partition-sum side: ``prod C(N_i - N_{i+1} - 1, m_i) C(r_i - 1, k_i - 1) q^{N_i r_i}``."""
    d = len(k)

    def weight_of(lam: Partition):
        Ns = lam.u + (0,)
        out = 1
        for i in range(d):
            out *= comb(Ns[i] - Ns[i + 1] - 1, m[i]) * comb(lam.v[i] - 1, k[i] - 1)
        return out

    return partition_series(weight_of, d, N)


def sz_binomial_identity_check(k: Sequence[int], m: Sequence[int], N: int) -> bool:
    return sz_binomial_expansion(k, m, N) == qzeta_sz(sz_word(k, m), N)


def sz_stuffle_check(s1: Sequence[int], s2: Sequence[int], N: int) -> bool:
    """Product of two SZ values against the SZ quasi-shuffle expansion."""
    lhs = qzeta_sz(s1, N) * qzeta_sz(s2, N)
    rhs = QSeries.zero(N)
    for w, c in quasi_shuffle(tuple(s1), tuple(s2), Rule.SZ).items():
        rhs = rhs + qzeta_sz(w, N).scale(c)
    return lhs == rhs


# ----------------------------------------------------- Bernoulli, Eisenstein

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = -1/2`` (from ``sum_{k<=n} C(n+1, k) B_k = 0``)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def beta(k: int) -> Fraction:
    """``zeta(k) / (2 pi i)^k = -B_k / (2 k!)`` for even k, 0 for odd k."""
    if k % 2:
        return Fraction(0)
    return -bernoulli(k) / (2 * factorial(k))


def bi_eisenstein_depth1(k: int, m: int, N: int) -> QSeries:
    """``G(k|m) = -[m=0] B_k/(2 k!) - [k=1] B_{m+1}/(2(m+1)) + 1/(k-1)! sum u^m v^{k-1} q^{uv}``."""
    if not (k > m >= 0):
        raise ValueError("need k > m >= 0")
    const = Fraction(0)
    if m == 0:
        const -= bernoulli(k) / (2 * factorial(k))
    if k == 1:
        const -= bernoulli(m + 1) / (2 * (m + 1))
    f = factorial(k - 1)
    d: dict = {0: const}
    for u in range(1, N + 1):
        for v in range(1, N // u + 1):
            d[u * v] = d.get(u * v, 0) + Fraction(u ** m * v ** (k - 1), f)
    return QSeries.from_sparse(d, N)


def eisenstein_derivative_check(k: int, m: int, N: int) -> bool:
    """``G(k|m) = (k-m-1)!/(k-1)! (q d/dq)^m G(k-m|0)`` (reading the lowered index as k-m)."""
    rhs = bi_eisenstein_depth1(k - m, 0, N)
    for _ in range(m):
        rhs = q_derivative(rhs)
    return bi_eisenstein_depth1(k, m, N) == rhs.scale(Fraction(factorial(k - m - 1), factorial(k - 1)))


def span_dimension(series: Sequence[QSeries], N: int | None = None) -> int:
    """Rank of the coefficient matrix; all series must share the same order."""
    series = list(series)
    if not series:
        return 0
    orders = {s.order for s in series}
    if len(orders) != 1 or (N is not None and orders != {N}):
        raise ValueError(f"mismatched truncation orders: {sorted(orders)}")
    return rank([s.coeffs for s in series])


def divisor_sigma(k: int, n: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)
