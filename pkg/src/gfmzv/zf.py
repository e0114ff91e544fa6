"""Formal multiple zeta values.

The ambient algebra is ``(Q<X>^adm, sh)``: linear combinations of admissible
X-words (empty, or starting with x_0 and ending with x_1) under the shuffle
product.  Shuffle-regularized values land there directly, so the shuffle
relations hold identically; the quotient by the extended double shuffle
relations is then cut out by the stuffle defects

    zeta_st(u * v) - zeta_st(u) zeta_st(v)

and the ideal they generate.  Normal forms reduce against that ideal with
columns ordered deepest-first, so the surviving words have small depth.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .hopf import Rule, qsh_terms
from .linalg import RelationSpace
from .maps import iota_word
from .regularization import is_admissible_x, reg_shuffle
from .words import X, Y, Poly, enumerate_words, parse_word


def admissible_words(w: int) -> tuple:
    """Admissible X-words of weight ``w``, deepest first, then lexicographic."""
    words = [v for v in enumerate_words(X, w) if is_admissible_x(v)]
    return tuple(sorted(words, key=lambda v: (-sum(v), v)))


def _zf_key(v: tuple):
    return (len(v), -sum(v), v)


class ZfElement:
    """Element of the ambient algebra; ``terms`` maps admissible words to coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, check: bool = True):
        d = {}
        for v, c in (terms or {}).items():
            if check:
                v = X.check(v)
                if not is_admissible_x(v):
                    raise ValueError(f"{v} is not an admissible word")
            if c:
                d[v] = Fraction(c)
        self.terms = d

    @classmethod
    def from_poly(cls, p: Poly) -> "ZfElement":
        return cls(p.terms)

    @classmethod
    def one(cls) -> "ZfElement":
        return cls({(): 1}, check=False)

    @classmethod
    def zero(cls) -> "ZfElement":
        return cls({}, check=False)

    def to_poly(self) -> Poly:
        return Poly(X, self.terms, check=False)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZfElement.one().scale(other)
        d = dict(self.terms)
        for v, c in other.terms.items():
            d[v] = d.get(v, 0) + c
        return ZfElement({v: c for v, c in d.items() if c}, check=False)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZfElement.one().scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "ZfElement":
        c = Fraction(c)
        if not c:
            return ZfElement.zero()
        return ZfElement({v: a * c for v, a in self.terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, ZfElement):
            d: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    for w, c in qsh_terms(u, v, Rule.SHUFFLE):
                        d[w] = d.get(w, 0) + a * b * c
            return ZfElement({v: c for v, c in d.items() if c}, check=False)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = ZfElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        """Equality in the ambient algebra (use :func:`zf_equal` for the quotient)."""
        if isinstance(other, (int, Fraction)):
            other = ZfElement.one().scale(other)
        if not isinstance(other, ZfElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def components(self) -> dict:
        out: dict = {}
        for v, c in self.terms.items():
            out.setdefault(len(v), {})[v] = c
        return out

    def max_weight(self) -> int:
        return max((len(v) for v in self.terms), default=0)

    def __repr__(self):
        return format_zf(self)


def format_zf_word(v: tuple) -> str:
    """``x0 x1 x0 x0 x1 -> z[0,1;0,0,1]`` (blocks end at each x_1); the unit is ``1``."""
    if not v:
        return "1"
    blocks, cur = [], []
    for a in v:
        cur.append(str(a))
        if a == 1:
            blocks.append(",".join(cur))
            cur = []
    return "z[" + ";".join(blocks) + "]"


def parse_zf_word(text: str) -> tuple:
    text = text.strip()
    if text == "1":
        return ()
    if not (text.startswith("z[") and text.endswith("]")):
        raise ValueError(f"not a zeta symbol: {text!r}")
    body = text[2:-1].replace(";", ",")
    return tuple(int(t) for t in body.split(",") if t.strip())


def format_zf(a: ZfElement) -> str:
    if not a.terms:
        return "0"
    parts = []
    for v in sorted(a.terms, key=_zf_key):
        c = a.terms[v]
        sym = format_zf_word(v)
        if sym == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(sym)
        elif c == -1:
            parts.append("-" + sym)
        else:
            parts.append(f"{c}*{sym}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# ----------------------------------------------------------- evaluations

@lru_cache(maxsize=None)
def _zeta_sh_word(w: tuple) -> ZfElement:
    return ZfElement(reg_shuffle(Poly(X, {w: 1}, check=False)).terms, check=False)


def zeta_sh_f(w) -> ZfElement:
    """Shuffle-regularized formal value of an X-word (tuple, text, or Poly over X)."""
    if isinstance(w, Poly):
        if w.alphabet is not X:
            raise ValueError("zeta_sh_f takes X-words")
        out = ZfElement.zero()
        for v, c in w.items():
            out = out + _zeta_sh_word(v).scale(c)
        return out
    if isinstance(w, str):
        _, w = parse_word(w, X)
    return _zeta_sh_word(X.check(w))


def zeta_f(*ks: int) -> ZfElement:
    """``zeta^f(k_1, ..., k_d)`` for an index with ``k_i >= 1``."""
    return zeta_sh_f(iota_word(Y.check(tuple(ks))))


@lru_cache(maxsize=None)
def correction_coefficient(j: int) -> ZfElement:
    """Coefficient of ``y_1^j`` in ``exp(sum_{n>=2} (-1)^{n-1}/n zeta(n) y_1^n)``.

    Uses ``j c_j = sum_{n=2}^{j} (-1)^{n-1} zeta(n) c_{j-n}`` (from E' = L'E).
    """
    if j == 0:
        return ZfElement.one()
    acc = ZfElement.zero()
    for n in range(2, j + 1):
        acc = acc + (zeta_f(n) * correction_coefficient(j - n)).scale((-1) ** (n - 1))
    return acc.scale(Fraction(1, j))


@lru_cache(maxsize=None)
def _zeta_st_word(y: tuple) -> ZfElement:
    a = 0
    while a < len(y) and y[a] == 1:
        a += 1
    out = ZfElement.zero()
    for j in range(a + 1):
        c = correction_coefficient(j)
        if c:
            out = out + c * _zeta_sh_word(iota_word(y[j:]))
    return out


def zeta_st_f(y) -> ZfElement:
    """Stuffle-regularized formal value of a Y-word (coefficient in the corrected series)."""
    if isinstance(y, Poly):
        if y.alphabet is not Y:
            raise ValueError("zeta_st_f takes Y-words")
        out = ZfElement.zero()
        for v, c in y.items():
            out = out + _zeta_st_word(v).scale(c)
        return out
    if isinstance(y, str):
        _, y = parse_word(y, Y)
    return _zeta_st_word(Y.check(y))


# ------------------------------------------------------------- relations

def stuffle_defect(u: tuple, v: tuple) -> ZfElement:
    prod = Poly(Y, dict(qsh_terms(u, v, Rule.STUFFLE)), check=False)
    return zeta_st_f(prod) - zeta_st_f(u) * zeta_st_f(v)


@lru_cache(maxsize=None)
def _rel_eds(w: int) -> RelationSpace:
    space = RelationSpace(admissible_words(w))
    for k in range(1, w // 2 + 1):
        for u in enumerate_words(Y, k):
            for v in enumerate_words(Y, w - k):
                if k < w - k or u <= v:
                    space.add(stuffle_defect(u, v).terms)
    # ideal closure: lower-weight relations times admissible words
    for k in range(2, w - 1):
        for row in _rel_eds(k).basis():
            r = ZfElement(row, check=False)
            for a in admissible_words(w - k):
                space.add((r * ZfElement({a: 1}, check=False)).terms)
    return space


def rel_eds(w: int) -> RelationSpace:
    """Weight-``w`` piece of the extended double shuffle ideal, row-reduced."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    return _rel_eds(w)


def zf_reduce(a: ZfElement) -> ZfElement:
    """Normal form modulo the extended double shuffle relations."""
    out: dict = {}
    for w, comp in a.components().items():
        out.update(rel_eds(w).reduce(comp))
    return ZfElement(out, check=False)


def zf_is_zero(a: ZfElement, bound: int | None = None) -> bool:
    if bound is not None and a.max_weight() > bound:
        raise ValueError(f"element has weight {a.max_weight()} above the bound {bound}")
    return all(rel_eds(w).contains(comp) for w, comp in a.components().items())


def zf_equal(a: ZfElement, b: ZfElement, bound: int | None = None) -> bool:
    """Equality modulo the extended double shuffle relations, weight by weight."""
    if isinstance(b, (int, Fraction)):
        b = ZfElement.one().scale(b)
    if bound is not None:
        for x in (a, b):
            if x.max_weight() > bound:
                raise ValueError(f"element has weight {x.max_weight()} above the bound {bound}")
    return zf_is_zero(a - b)


def zf_dim(w: int) -> int:
    """Dimension of the weight-``w`` piece of the quotient (computed, not asserted)."""
    return len(admissible_words(w)) - rel_eds(w).dim


def depth2_double_shuffle(k1: int, k2: int) -> tuple:
    """Stuffle and binomial-shuffle expansions of ``zeta(k1) zeta(k2)``, ``k1, k2 >= 2``."""
    if k1 < 2 or k2 < 2:
        raise ValueError("need k1, k2 >= 2")
    stuffle = zeta_f(k1, k2) + zeta_f(k2, k1) + zeta_f(k1 + k2)
    k = k1 + k2
    shuffle = ZfElement.zero()
    for j in range(2, k):
        c = comb(j - 1, k1 - 1) + comb(j - 1, k2 - 1)
        if c:
            shuffle = shuffle + zeta_f(j, k - j).scale(c)
    return stuffle, shuffle
