"""Quasi-shuffle products, the dual coproducts and the balanced antipode.

One recursive engine covers all four products; they differ only in the
letter merge ("diamond") allowed when two leading letters meet::

    SHUFFLE   on X: never merge
    STUFFLE   on Y: always merge, y_i <> y_j = y_{i+j}
    SZ        on B: always merge, b_i <> b_j = b_{i+j}
    BALANCED  on B: merge only if i >= 1 and j >= 1
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .words import B, X, Y, Alphabet, Poly, Series, TensorPoly, enumerate_words, weight, words_up_to


class Rule(enum.Enum):
    SHUFFLE = "shuffle"
    STUFFLE = "stuffle"
    SZ = "sz"
    BALANCED = "balanced"

    @property
    def alphabet(self) -> Alphabet:
        return {Rule.SHUFFLE: X, Rule.STUFFLE: Y, Rule.SZ: B, Rule.BALANCED: B}[self]

    @property
    def graded(self) -> bool:
        return self is not Rule.SZ

    def merge(self, i: int, j: int):
        """Merged letter index, or ``None`` when the rule forbids merging."""
        if self is Rule.SHUFFLE:
            return None
        if self is Rule.BALANCED and (i == 0 or j == 0):
            return None
        return i + j


def rule_for(alphabet: Alphabet, rule: Rule | str | None = None) -> Rule:
    if rule is None:
        return {X: Rule.SHUFFLE, Y: Rule.STUFFLE, B: Rule.BALANCED}[alphabet]
    rule = Rule(rule)
    if rule.alphabet is not alphabet:
        raise ValueError(f"rule {rule.value} does not act on alphabet {alphabet.name}")
    return rule


def _add_prefixed(acc: dict, letter: int, items):
    for w, c in items:
        k = (letter,) + w
        acc[k] = acc.get(k, 0) + c


@lru_cache(maxsize=200_000)
def _qsh(u: tuple, v: tuple, rule: Rule) -> tuple:
    # returns ((word, int coefficient), ...); callers pass u <= v
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict = {}
    a, b = u[0], v[0]
    _add_prefixed(acc, a, _qsh_sym(u[1:], v, rule))
    _add_prefixed(acc, b, _qsh_sym(u, v[1:], rule))
    m = rule.merge(a, b)
    if m is not None:
        _add_prefixed(acc, m, _qsh_sym(u[1:], v[1:], rule))
    return tuple(acc.items())


def _qsh_sym(u: tuple, v: tuple, rule: Rule) -> tuple:
    return _qsh(u, v, rule) if u <= v else _qsh(v, u, rule)


def quasi_shuffle(u: tuple, v: tuple, rule: Rule | str) -> Poly:
    """Quasi-shuffle product of two words."""
    rule = Rule(rule)
    al = rule.alphabet
    u, v = al.check(u), al.check(v)
    return Poly(al, _qsh_sym(u, v, rule), check=False)


def qsh_terms(u: tuple, v: tuple, rule: Rule) -> tuple:
    """Raw ``(word, int)`` pairs of ``u`` times ``v``; no validation."""
    return _qsh_sym(u, v, rule)


def qsh_poly(p: Poly, q: Poly, rule: Rule | str | None = None) -> Poly:
    """Bilinear extension of :func:`quasi_shuffle` (series are truncated)."""
    p._check_same(q)
    rule = rule_for(p.alphabet, rule)
    d: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            ab = a * b
            for w, c in _qsh_sym(u, v, rule):
                t = ab * c
                d[w] = d[w] + t if w in d else t
    if isinstance(p, Series) or isinstance(q, Series):
        bound = min(s.bound for s in (p, q) if isinstance(s, Series))
        return Series(p.alphabet, d, bound, check=False)
    return Poly(p.alphabet, d, check=False)


def qsh_power(p: Poly, n: int, rule: Rule | str | None = None) -> Poly:
    out = Poly.one(p.alphabet)
    for _ in range(n):
        out = qsh_poly(out, p, rule)
    return out


# ------------------------------------------------------------- coproducts

def delta_dec(w: tuple, alphabet: Alphabet = B) -> TensorPoly:
    """Deconcatenation: sum of ``u (x) v`` over ``uv = w``."""
    w = alphabet.check(w)
    return TensorPoly(alphabet, {(w[:i], w[i:]): 1 for i in range(len(w) + 1)})


def _merge_preimages(letter: int, rule: Rule):
    if rule is Rule.SHUFFLE:
        return []
    lo = 0 if rule is Rule.SZ else 1
    return [(i, letter - i) for i in range(lo, letter - lo + 1)]


@lru_cache(maxsize=None)
def _delta_letter(letter: int, rule: Rule) -> TensorPoly:
    d = {((), (letter,)): 1, ((letter,), ()): 1}
    for i, j in _merge_preimages(letter, rule):
        d[((i,), (j,))] = d.get(((i,), (j,)), 0) + 1
    return TensorPoly(rule.alphabet, d)


@lru_cache(maxsize=50_000)
def _delta_word(w: tuple, rule: Rule) -> TensorPoly:
    if not w:
        return TensorPoly(rule.alphabet, {((), ()): 1})
    return _delta_word(w[:-1], rule) * _delta_letter(w[-1], rule)


def delta_dual(w: tuple, rule: Rule | str) -> TensorPoly:
    """Coproduct dual to the quasi-shuffle product of ``rule``.

    On letters ``a`` it is ``1(x)a + a(x)1 + sum of i(x)j`` over the pairs
    merging to ``a``; it is extended multiplicatively for concatenation.
    """
    rule = Rule(rule)
    return _delta_word(rule.alphabet.check(w), rule)


def counit(w: tuple) -> int:
    return 1 if not w else 0


# ---------------------------------------------------------------- antipode

def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _antipode_letter(a: int) -> Poly:
    if a == 0:
        return Poly(B, {(0,): -1})
    return Poly(B, {c: (-1) ** len(c) for c in _compositions(a)}, check=False)


def antipode_b(w: tuple) -> Poly:
    """Antipode of ``(Q<<B>>, conc, Delta_b)``: anti-multiplicative extension
    of ``S(b_0) = -b_0`` and ``S(b_a) = sum over compositions of a``."""
    w = B.check(w)
    out = Poly.one(B)
    for a in reversed(w):
        out = out * _antipode_letter(a)
    return out


def antipode_recursive(w: tuple, rule: Rule | str = Rule.BALANCED) -> Poly:
    """Antipode from ``S(w) = -sum S(w') w''`` over the reduced coproduct.

    Independent of the closed formula in :func:`antipode_b`; used to check it.
    """
    rule = Rule(rule)
    return _antipode_rec(rule.alphabet.check(w), rule)


@lru_cache(maxsize=None)
def _antipode_rec(w: tuple, rule: Rule) -> Poly:
    al = rule.alphabet
    if not w:
        return Poly.one(al)
    out = Poly.zero(al)
    for (u, v), c in delta_dual(w, rule).terms.items():
        if not v:
            continue
        out = out - (_antipode_rec(u, rule) * Poly.word(al, v)).scale(c)
    return out


def antipode_defect(w: tuple) -> Poly:
    """``conc o (S (x) id) o Delta_b (w) - counit(w) 1``; zero for a Hopf algebra."""
    out = Poly.zero(B)
    for (u, v), c in delta_dual(w, Rule.BALANCED).terms.items():
        out = out + (antipode_b(u) * Poly.word(B, v)).scale(c)
    return out - Poly.one(B).scale(counit(w))


def coassociativity_defect(w: tuple, rule: Rule | str) -> dict:
    """Difference of ``(Delta (x) id) Delta`` and ``(id (x) Delta) Delta`` as a
    dictionary on word triples; empty when coassociative on ``w``."""
    rule = Rule(rule)
    acc: dict = {}
    for (u, v), c in delta_dual(w, rule).terms.items():
        for (u1, u2), a in delta_dual(u, rule).terms.items():
            k = (u1, u2, v)
            acc[k] = acc.get(k, 0) + a * c
        for (v1, v2), a in delta_dual(v, rule).terms.items():
            k = (u, v1, v2)
            acc[k] = acc.get(k, 0) - a * c
    return {k: c for k, c in acc.items() if c}


# -------------------------------------------------------- pairing & groups

def _pairs_by_weight(alphabet: Alphabet, bound: int, ordered: bool = True):
    """Word pairs ``(u, v)`` with ``wt(u) + wt(v) <= bound``, by total weight."""
    for s in range(bound + 1):
        for a in range(s + 1):
            for u in enumerate_words(alphabet, a):
                for v in enumerate_words(alphabet, s - a):
                    if ordered or (weight(u, alphabet), u) <= (weight(v, alphabet), v):
                        yield u, v


def pairing_dual_check(bound: int, rule: Rule | str) -> bool:
    """``(delta_dual(w) | u (x) v) == (w | u * v)`` for all words of weight <= bound."""
    return not pairing_dual_mismatches(bound, rule)


def pairing_dual_mismatches(bound: int, rule: Rule | str, limit: int = 10) -> list:
    rule = Rule(rule)
    al = rule.alphabet
    lhs: dict = {}
    for w in words_up_to(al, bound):
        for (u, v), c in delta_dual(w, rule).terms.items():
            if weight(u, al) <= bound and weight(v, al) <= bound:
                lhs[(w, u, v)] = c
    rhs: dict = {}
    if rule.graded:
        pairs = _pairs_by_weight(al, bound)
    else:
        pairs = ((u, v) for u in words_up_to(al, bound) for v in words_up_to(al, bound))
    for u, v in pairs:
        for w, c in _qsh_sym(u, v, rule):
            if weight(w, al) <= bound:
                rhs[(w, u, v)] = c
    bad = []
    for k in sorted(set(lhs) | set(rhs)):
        if lhs.get(k, 0) != rhs.get(k, 0):
            bad.append((k, lhs.get(k, 0), rhs.get(k, 0)))
            if len(bad) >= limit:
                break
    return bad


def is_grouplike(phi: Series, rule: Rule | str | None = None, is_zero=None):
    """Test ``Delta(phi) = phi (x) phi`` in its dual form.

    Returns ``(ok, counterexample)`` where the counterexample is ``None``, the
    string ``"unit"`` when ``(phi | 1) != 1``, or the first failing word pair
    ``(u, v)`` with ``(phi | u * v) != (phi | u)(phi | v)``.
    ``is_zero`` decides equality of coefficients (default: exact).
    """
    rule = rule_for(phi.alphabet, rule)
    is_zero = is_zero or (lambda c: not c)
    if not is_zero(phi.coeff(()) - 1):
        return False, "unit"
    al = phi.alphabet
    for u, v in _pairs_by_weight(al, phi.bound, ordered=False):
        if not u or not v:
            continue
        lhs = 0
        for w, c in _qsh_sym(u, v, rule):
            if weight(w, al) <= phi.bound:
                a = phi.terms.get(w)
                if a is not None:
                    lhs = lhs + a * c
        rhs = phi.coeff(u) * phi.coeff(v)
        if not is_zero(lhs - rhs):
            return False, (u, v)
    return True, None


def is_primitive(p: Poly, bound: int, rule: Rule | str | None = None) -> bool:
    """``(p | u * v) = 0`` for all nonempty ``u, v`` and ``(p | 1) = 0``."""
    rule = rule_for(p.alphabet, rule)
    if p.coeff(()):
        return False
    for u, v in _pairs_by_weight(p.alphabet, bound, ordered=False):
        if not u or not v:
            continue
        s = sum((p.coeff(w) * c for w, c in _qsh_sym(u, v, rule)), Fraction(0))
        if s:
            return False
    return True


def b0_power(n: int) -> Poly:
    """``b_0^{*_b n} = n! b_0^n``."""
    return Poly(B, {(0,) * n: factorial(n)})
