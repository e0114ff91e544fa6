"""The quotient algebra ``G^f = (Q<B>, *_b) / Rel``.

``Rel`` is the ideal generated by ``b_0`` and all ``v - tau(v)`` for words
``v`` not starting with ``b_0``.  Two ways of computing its graded pieces:

* ``direct``: span of ``g *_b u`` for every generator ``g`` and word ``u``.
* ``split``: ``Q<B> = ker(reg_balanced) (+) Q<B>^0`` as algebras, so
  ``Rel_w = {x : reg_balanced(x) in R0_w}`` where ``R0`` is the ideal of
  ``(Q<B>^0, *_b)`` generated by the ``v - tau(v)``.  Its RREF is that of
  ``R0_w`` together with ``x - nf(reg_balanced(x))`` for words ``x``
  starting with ``b_0``.

Both produce the same reduced basis; the second works in the much smaller
ambient ``B^0`` and is used for normal forms.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from itertools import product as _iproduct

from .hopf import Rule, qsh_poly, qsh_terms
from .linalg import RelationSpace
from .maps import tau_word
from .regularization import reg_balanced
from .words import B, Poly, enumerate_words, format_poly, weight


def words_b0(w: int) -> tuple:
    """Words of weight ``w`` not starting with ``b_0`` (the basis of Q<B>^0_w)."""
    return tuple(v for v in enumerate_words(B, w) if not v or v[0] != 0)


def tau_generators(k: int) -> list:
    """``v - tau(v)`` for words ``v`` of weight k in B^0, one per non-fixed pair."""
    out = []
    for v in words_b0(k):
        t = tau_word(v)
        if v < t:
            out.append(((v, 1), (t, -1)))
    return out


def _products(gens, w_gen: int, w: int, words_fn):
    """Rows ``g *_b u`` with ``u`` ranging over ``words_fn(w - w_gen)``."""
    for g in gens:
        for u in words_fn(w - w_gen):
            row: dict = {}
            for v, c in g:
                for t, a in qsh_terms(v, u, Rule.BALANCED):
                    row[t] = row.get(t, 0) + c * a
            yield row


@lru_cache(maxsize=None)
def _r0(w: int) -> RelationSpace:
    space = RelationSpace(words_b0(w))
    for k in range(1, w + 1):
        space.add_many(_products(tau_generators(k), k, w, words_b0))
    return space


def r0_space(w: int) -> RelationSpace:
    """The ideal generated by the ``v - tau(v)`` inside ``(Q<B>^0, *_b)``, weight ``w``."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    return _r0(w)


def _rel_direct(w: int) -> RelationSpace:
    space = RelationSpace(enumerate_words(B, w))
    if w >= 1:
        space.add_many(_products([(((0,), 1),)], 1, w, lambda n: enumerate_words(B, n)))
    for k in range(1, w + 1):
        space.add_many(_products(tau_generators(k), k, w, lambda n: enumerate_words(B, n)))
    return space


def _rel_split(w: int) -> RelationSpace:
    r0 = r0_space(w)
    space = RelationSpace(enumerate_words(B, w))
    for row in r0.basis():
        space.add(row)
    for x in enumerate_words(B, w):
        if x and x[0] == 0:
            nf = r0.reduce(reg_balanced(Poly(B, {x: 1}, check=False)))
            row = {t: -c for t, c in nf.items()}
            row[x] = 1
            space.add(row)
    return space


@lru_cache(maxsize=None)
def _rel(w: int, method: str) -> RelationSpace:
    if method == "direct":
        return _rel_direct(w)
    if method == "split":
        return _rel_split(w)
    raise ValueError(f"unknown method {method!r}; use 'direct' or 'split'")


def rel_tau0(w: int, method: str = "split") -> RelationSpace:
    """Weight-``w`` piece of the relation ideal, row-reduced over all B-words of weight w."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    return _rel(w, method)


def gf_dim(w: int) -> int:
    """Dimension of the weight-``w`` piece of G^f."""
    return len(words_b0(w)) - r0_space(w).dim


# ------------------------------------------------------------ elements

def gf_reduce_poly(p: Poly) -> Poly:
    """Canonical representative of the class of ``p``: supported on B^0 non-pivot words."""
    if p.alphabet is not B:
        raise ValueError("gf_reduce acts on Q<B>")
    out: dict = {}
    for w, comp in p.homogeneous_components().items():
        out.update(r0_space(w).reduce(reg_balanced(comp)))
    return Poly(B, out, check=False)


class GfElement:
    """Class in G^f, stored through its reduced representative."""

    __slots__ = ("rep",)

    def __init__(self, p: Poly, reduced: bool = False):
        self.rep = p if reduced else gf_reduce_poly(p)

    @classmethod
    def f(cls, w) -> "GfElement":
        return cls(Poly.word(B, w))

    def __add__(self, other):
        return GfElement(self.rep + other.rep, reduced=True)

    def __sub__(self, other):
        return GfElement(self.rep - other.rep, reduced=True)

    def __neg__(self):
        return GfElement(-self.rep, reduced=True)

    def scale(self, c) -> "GfElement":
        return GfElement(self.rep.scale(c), reduced=True)

    def __mul__(self, other):
        if isinstance(other, GfElement):
            return gf_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.rep.terms

    def __eq__(self, other):
        if isinstance(other, GfElement):
            return self.rep == other.rep
        if isinstance(other, Poly):
            return self.rep == gf_reduce_poly(other)
        if other == 0:
            return self.is_zero()
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"GfElement({format_poly(self.rep)})"


def gf_reduce(p: Poly) -> GfElement:
    return GfElement(p)


def gf_mul(a: GfElement, b: GfElement) -> GfElement:
    return GfElement(qsh_poly(a.rep, b.rep, Rule.BALANCED))


def gf_equal(p: Poly, q: Poly) -> bool:
    return not gf_reduce_poly(p - q).terms


# ------------------------------------------------------ product identity

def _bw(k: int, m: int) -> tuple:
    return (k,) + (0,) * m


def depth2_expansions(k1: int, k2: int, m1: int, m2: int) -> tuple:
    """The two closed-form right-hand sides for ``f(b_k1 b_0^m1) f(b_k2 b_0^m2)``.

    The first is the balanced product written out; the second is what one
    gets by applying tau to both factors, multiplying, and applying tau again.
    """
    if k1 < 1 or k2 < 1 or m1 < 0 or m2 < 0:
        raise ValueError("need k1, k2 >= 1 and m1, m2 >= 0")
    m, k = m1 + m2, k1 + k2
    first: dict = {}

    def put(d, w, c):
        if c:
            d[w] = d.get(w, 0) + c

    for j in range(m + 1):
        put(first, _bw(k1, j) + _bw(k2, m - j), comb(m - j, m2))
        put(first, _bw(k2, j) + _bw(k1, m - j), comb(m - j, m1))
    put(first, _bw(k, m), comb(m, m1))
    second: dict = {}
    for j in range(1, k):
        put(second, _bw(j, m1) + _bw(k - j, m2), comb(j - 1, k1 - 1))
        put(second, _bw(j, m2) + _bw(k - j, m1), comb(j - 1, k2 - 1))
    put(second, _bw(k - 1, m + 1), comb(k - 2, k1 - 1))
    return Poly(B, first), Poly(B, second)


def depth2_product_identity(k1: int, k2: int, m1: int, m2: int) -> bool:
    lhs = gf_mul(GfElement.f(_bw(k1, m1)), GfElement.f(_bw(k2, m2)))
    first, second = depth2_expansions(k1, k2, m1, m2)
    return lhs == first and lhs == second


# ----------------------------------------------------------- freeness

def quasimodular_monomials(max_weight: int) -> dict:
    """``{(a, b, c): f(b_2)^a f(b_4)^b f(b_6)^c}`` as balanced products, weight <= max_weight."""
    gens = {2: Poly.word(B, (2,)), 4: Poly.word(B, (4,)), 6: Poly.word(B, (6,))}
    out = {}
    for a, b, c in _iproduct(range(max_weight // 2 + 1), range(max_weight // 4 + 1), range(max_weight // 6 + 1)):
        if 2 * a + 4 * b + 6 * c > max_weight:
            continue
        p = Poly.one(B)
        for e, g in ((a, gens[2]), (b, gens[4]), (c, gens[6])):
            for _ in range(e):
                p = qsh_poly(p, g, Rule.BALANCED)
        out[(a, b, c)] = p
    return out


def freeness_ranks(max_weight: int = 8) -> dict:
    """Per weight: ``(number of monomials, rank of their classes in G^f)``."""
    by_weight: dict = {}
    for exps, p in quasimodular_monomials(max_weight).items():
        by_weight.setdefault(weight(next(iter(p.words()))) if p.terms else 0, []).append(p)
    out = {}
    for w, polys in sorted(by_weight.items()):
        space = RelationSpace(words_b0(w))
        for p in polys:
            space.add(gf_reduce_poly(p))
        out[w] = (len(polys), space.dim)
    return out


def freeness_proxy(max_weight: int = 8) -> bool:
    return all(n == r for n, r in freeness_ranks(max_weight).values())
