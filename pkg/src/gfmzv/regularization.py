"""Regularization maps.

* balanced: ``Q<B> = Q<B>^0[b_0]`` for ``*_b``; ``reg_T`` and its inverse
  make this isomorphism explicit, ``reg_balanced`` sets ``b_0 = 0``.
* shuffle: ``Q<X> = Q<X>^adm[x_0, x_1]``; ``reg_shuffle`` sets both to 0.
* stuffle: ``Q<Y> = Q<Y>^adm[y_1]``; ``reg_stuffle`` sets ``y_1 = 0``.

Everything is exact triangular elimination on the number of leading (and,
for the shuffle case, trailing) letters that are polynomial generators.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .hopf import Rule, qsh_terms
from .words import B, X, Y, Poly, format_word, join_terms


class PolyWithT:
    """Element of Q<B>^0[T]: a map ``(word, n) -> coefficient`` for ``w T^n``."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        d: dict = {}
        for (w, n), c in items:
            w = B.check(w)
            if w and w[0] == 0:
                raise ValueError(f"word {w} starts with b_0; not in Q<B>^0")
            d[(w, n)] = d.get((w, n), 0) + Fraction(c)
        self.terms = {k: c for k, c in d.items() if c}

    def at_T0(self) -> Poly:
        return Poly(B, {w: c for (w, n), c in self.terms.items() if n == 0}, check=False)

    def __eq__(self, other):
        return isinstance(other, PolyWithT) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return join_terms((c, _t_body(w, n)) for (w, n), c in sorted(self.terms.items()))


def _t_body(w: tuple, n: int) -> str:
    if n == 0:
        return format_word(w, B)
    t = "T" if n == 1 else f"T^{n}"
    return t if not w else f"{format_word(w, B)}*{t}"


def _leading_b0(w: tuple) -> int:
    n = 0
    while n < len(w) and w[n] == 0:
        n += 1
    return n


def _times_b0_power(u: tuple, n: int) -> dict:
    """``u *_b b_0^n`` (without the n! factor) as a dict."""
    return dict(qsh_terms(u, (0,) * n, Rule.BALANCED))


def reg_T_forward(p: PolyWithT) -> Poly:
    """``w T^n -> w *_b b_0^{*_b n} = n! (w *_b b_0^n)``."""
    d: dict = {}
    for (w, n), c in p.terms.items():
        f = factorial(n)
        for v, a in _times_b0_power(w, n).items():
            d[v] = d.get(v, 0) + c * f * a
    return Poly(B, d, check=False)


def reg_T_inverse(p: Poly) -> PolyWithT:
    if p.alphabet is not B:
        raise ValueError("reg_T_inverse acts on Q<B>")
    rest = dict(p.terms)
    out: dict = {}
    while rest:
        # the word b_0^n u with maximal n appears in u *_b b_0^n with coefficient 1
        w = max(rest, key=lambda v: (_leading_b0(v), v))
        c = rest[w]
        n = _leading_b0(w)
        u = w[n:]
        out[(u, n)] = out.get((u, n), 0) + c / factorial(n)
        for v, a in _times_b0_power(u, n).items():
            r = rest.get(v, 0) - c * a
            if r:
                rest[v] = r
            else:
                rest.pop(v, None)
    return PolyWithT(out)


@lru_cache(maxsize=None)
def _reg_balanced_word(w: tuple) -> tuple:
    return tuple(reg_T_inverse(Poly(B, {w: 1}, check=False)).at_T0().terms.items())


def reg_balanced(p: Poly) -> Poly:
    """Algebra morphism ``(Q<B>, *_b) -> (Q<B>^0, *_b)``, identity on Q<B>^0, ``b_0 -> 0``."""
    if p.alphabet is not B:
        raise ValueError("reg_balanced acts on Q<B>")
    return p.map_linear(lambda w: Poly(B, _reg_balanced_word(w), check=False) if w[:1] == (0,) else Poly(B, {w: 1}, check=False))


# ------------------------------------------------------------- shuffle

def _split_x(w: tuple):
    a = 0
    while a < len(w) and w[a] == 1:
        a += 1
    b = 0
    while b < len(w) - a and w[len(w) - 1 - b] == 0:
        b += 1
    return a, b


def is_admissible_x(w: tuple) -> bool:
    """Empty, or starts with x_0 and ends with x_1."""
    return not w or (w[0] == 0 and w[-1] == 1)


@lru_cache(maxsize=None)
def _reg_shuffle_word(w: tuple) -> tuple:
    a, b = _split_x(w)
    if a == 0 and b == 0:
        return ((w, Fraction(1)),)
    if a:
        # x_1 sh (x_1^{a-1} v x_0^b) = a * w + words with fewer leading x_1
        rest, letter, k = w[1:], (1,), a
    else:
        rest, letter, k = w[:-1], (0,), b
    acc: dict = {}
    for v, c in qsh_terms(letter, rest, Rule.SHUFFLE):
        if v == w:
            assert c == k
            continue
        for t, e in _reg_shuffle_word(v):
            acc[t] = acc.get(t, 0) - Fraction(c, k) * e
    return tuple((t, e) for t, e in acc.items() if e)


def reg_shuffle(p: Poly) -> Poly:
    """Shuffle regularization: ``x_0, x_1 -> 0``, identity on admissible words."""
    if p.alphabet is not X:
        raise ValueError("reg_shuffle acts on Q<X>")
    return p.map_linear(lambda w: Poly(X, _reg_shuffle_word(w), check=False))


# ------------------------------------------------------------- stuffle

def is_admissible_y(w: tuple) -> bool:
    return not w or w[0] != 1


@lru_cache(maxsize=None)
def _reg_stuffle_word(w: tuple) -> tuple:
    a = 0
    while a < len(w) and w[a] == 1:
        a += 1
    if a == 0:
        return ((w, Fraction(1)),)
    acc: dict = {}
    for v, c in qsh_terms((1,), w[1:], Rule.STUFFLE):
        if v == w:
            assert c == a
            continue
        for t, e in _reg_stuffle_word(v):
            acc[t] = acc.get(t, 0) - Fraction(c, a) * e
    return tuple((t, e) for t, e in acc.items() if e)


def reg_stuffle(p: Poly) -> Poly:
    """Stuffle regularization: ``y_1 -> 0``, identity on words not starting with y_1."""
    if p.alphabet is not Y:
        raise ValueError("reg_stuffle acts on Q<Y>")
    return p.map_linear(lambda w: Poly(Y, _reg_stuffle_word(w), check=False))
