"""Membership tests for DM and BM, the embedding theta, the projection p,
the Ihara product, and the linearized spaces dm_0 and bm_0.

Series coefficients are either rationals or ``ZfElement``; equality of
coefficients goes through :func:`coefficient_is_zero`, which reduces
formal zeta elements modulo the double shuffle relations.  Grouplike
conditions are tested in their dual form (multiplicativity of the
coefficient function on products of words).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .hopf import Rule, is_grouplike, qsh_terms
from .linalg import kernel_basis
from .maps import piY, tau_word, theta_X_anti, theta_Y
from .words import B, X, Y, Poly, Series, enumerate_words, format_word, words_up_to
from .zf import ZfElement, zeta_sh_f, zeta_st_f, zf_is_zero


def coefficient_is_zero(c) -> bool:
    if isinstance(c, ZfElement):
        return zf_is_zero(c)
    return not c


def _witness_text(w, alphabet) -> str | None:
    if w is None:
        return None
    if isinstance(w, str):
        return w
    if isinstance(w, tuple) and len(w) == 2 and all(isinstance(t, tuple) for t in w):
        return f"({format_word(w[0], alphabet)}, {format_word(w[1], alphabet)})"
    return format_word(w, alphabet)


@dataclass
class Condition:
    name: str
    passed: bool
    witness: object = None  # first failing word or word pair
    alphabet: object = None  # alphabet of the witness when it differs from the report's

    def witness_text(self, default_alphabet) -> str | None:
        return _witness_text(self.witness, self.alphabet or default_alphabet)


@dataclass
class SchemeReport:
    scheme: str
    bound: int
    alphabet: object
    conditions: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> Condition:
        return next(c for c in self.conditions if c.name == name)

    def to_dict(self) -> dict:
        return {
            "type": "report",
            "scheme": self.scheme,
            "bound": self.bound,
            "passed": self.passed,
            "conditions": [
                {"name": c.name, "passed": c.passed, "witness": c.witness_text(self.alphabet)}
                for c in self.conditions
            ],
        }

    def __str__(self):
        lines = [f"{self.scheme} (weight <= {self.bound}): {'pass' if self.passed else 'FAIL'}"]
        for c in self.conditions:
            w = c.witness_text(self.alphabet)
            lines.append(f"  ({c.name}) {'pass' if c.passed else 'fail'}" + (f", witness {w}" if w else ""))
        return "\n".join(lines)


# ---------------------------------------------------------------- phi_*

def phi_star(phi: Series) -> Series:
    """``exp(sum_{n>=2} (-1)^{n-1}/n (Pi_Y phi | y_n) y_1^n) Pi_Y(phi)``, truncated."""
    if phi.alphabet is not X:
        raise ValueError("phi_star takes a series over X")
    py = Series(Y, piY(phi).terms, phi.bound, check=False)
    return correction_series(lambda n: py.coeff((n,)), phi.bound) * py


def correction_series(zeta_n, bound: int) -> Series:
    """``exp(sum_{n>=2} (-1)^{n-1}/n zeta_n(n) y_1^n)`` as a series in y_1."""
    # c_j from j c_j = sum_n n l_n c_{j-n} with n l_n = (-1)^{n-1} zeta_n(n)
    c = [Fraction(1)]
    for j in range(1, bound + 1):
        acc = Fraction(0)
        for n in range(2, j + 1):
            a = zeta_n(n)
            if a and c[j - n]:
                term = a * c[j - n]
                acc = acc + (term if n % 2 else -term)
        c.append(acc * Fraction(1, j) if acc else Fraction(0))
    return Series(Y, {(1,) * j: cj for j, cj in enumerate(c)}, bound, check=False)


# ------------------------------------------------------------ DM and BM

def _coeff_condition(name, series, words, target, is_zero):
    for w in words:
        if not is_zero(series.coeff(w) - target):
            return Condition(name, False, w)
    return Condition(name, True)


def check_dm(phi: Series, lam=None, is_zero=None) -> SchemeReport:
    """Conditions (i)-(iii) of DM, and (iv) ``(phi|x0 x1) = lam`` when ``lam`` is given."""
    is_zero = is_zero or coefficient_is_zero
    rep = SchemeReport("DM" if lam is None else f"DM_{lam}", phi.bound, X)
    rep.conditions.append(_coeff_condition("i", phi, [w for w in [(0,), (1,)] if phi.bound >= 1], 0, is_zero))
    ok, wit = is_grouplike(phi, Rule.SHUFFLE, is_zero)
    rep.conditions.append(Condition("ii", ok, wit))
    ps = phi_star(phi)
    ok, wit = is_grouplike(ps, Rule.STUFFLE, is_zero)
    rep.conditions.append(Condition("iii", ok, wit, Y))
    if lam is not None:
        rep.conditions.append(_coeff_condition("iv", phi, [(0, 1)] if phi.bound >= 2 else [], lam, is_zero))
    return rep


def check_bm(Phi: Series, lmn=None, is_zero=None) -> SchemeReport:
    """Conditions (i)-(iii) of BM, and (iv) on ``(Phi|b_2), (Phi|b_4), (Phi|b_6)`` when given."""
    is_zero = is_zero or coefficient_is_zero
    if Phi.alphabet is not B:
        raise ValueError("check_bm takes a series over B")
    rep = SchemeReport("BM" if lmn is None else f"BM_{tuple(lmn)}", Phi.bound, B)
    rep.conditions.append(_coeff_condition("i", Phi, [(0,)] if Phi.bound >= 1 else [], 0, is_zero))
    ok, wit = is_grouplike(Phi, Rule.BALANCED, is_zero)
    rep.conditions.append(Condition("ii", ok, wit))
    bad = None
    for w in words_up_to(B, Phi.bound):
        if w and w[0] == 0:
            continue
        t = tau_word(w)
        if t > w and not is_zero(Phi.coeff(t) - Phi.coeff(w)):
            bad = w
            break
    rep.conditions.append(Condition("iii", bad is None, bad))
    if lmn is not None:
        bad = None
        for k, target in zip((2, 4, 6), lmn):
            if k <= Phi.bound and not is_zero(Phi.coeff((k,)) - target):
                bad = (k,)
                break
        rep.conditions.append(Condition("iv", bad is None, bad))
    return rep


# ----------------------------------------------------------- theta and p

def theta_embed(phi: Series) -> Series:
    """``theta_X^anti(phi) . theta_Y(phi_*)``, truncated at the bound of ``phi``."""
    a = Series(B, theta_X_anti(phi).terms, phi.bound, check=False)
    b = Series(B, theta_Y(phi_star(phi)).terms, phi.bound, check=False)
    return a * b


def restrict_b01(Phi: Series) -> Series:
    """Part of a B-series on words over {b_0, b_1}, pulled back to X (reversed).

    For ``Phi = theta_embed(phi)`` this agrees with ``phi`` on words starting
    with x_0, but not in general: the b_1-only words of ``theta_Y(phi_*)``
    coming from the correction factor also contribute.
    """
    return Series(X, {w[::-1]: c for w, c in Phi.items() if all(a <= 1 for a in w)}, Phi.bound, check=False)


def theta_inverse(Phi: Series) -> Series:
    """Recover ``phi`` from ``theta_embed(phi)`` using only its {b_0, b_1}-part.

    That part is ``theta_X^anti(phi) theta_Y(phi_corr)``; the correction
    factor only needs ``(phi|x_0^{n-1} x_1)``, which is the coefficient of
    ``b_1 b_0^{n-1}`` there, so it can be rebuilt and divided off.
    """
    W = Phi.bound
    R = Series(B, {w: c for w, c in Phi.items() if all(a <= 1 for a in w)}, W, check=False)
    corr = correction_series(lambda n: R.coeff((1,) + (0,) * (n - 1)), W)
    A = R * Series(B, theta_Y(corr).terms, W, check=False).inverse()
    return Series(X, {w[::-1]: c for w, c in A.items()}, W, check=False)


def phi_zeta(bound: int) -> Series:
    """Generating series ``sum_w zeta_sh^f(w) w`` over X-words of weight <= bound."""
    return Series(X, {w: zeta_sh_f(w) for w in words_up_to(X, bound)}, bound, check=False)


def p_project_word(w: tuple) -> ZfElement:
    return _p_word(B.check(w))


@lru_cache(maxsize=None)
def _p_word(w: tuple) -> ZfElement:
    out = ZfElement.zero()
    for i in range(len(w) + 1):
        u, v = w[:i], w[i:]
        if any(a > 1 for a in u):
            break
        if 0 in v:
            continue
        out = out + zeta_sh_f(u[::-1]) * zeta_st_f(v)
    return out


def p_project(p, bound: int | None = None) -> ZfElement:
    """The projection ``f(w) -> sum over w = uv`` of shuffle times stuffle values."""
    if isinstance(p, tuple):
        p = Poly.word(B, p)
    if p.alphabet is not B:
        raise ValueError("p_project takes B-words")
    if bound is not None and p.max_weight() > bound:
        raise ValueError(f"weight {p.max_weight()} above the bound {bound}")
    out = ZfElement.zero()
    for w, c in p.items():
        out = out + p_project_word(w).scale(c)
    return out


# --------------------------------------------------------------- Ihara

def ihara_mul(G: Series, H: Series) -> Series:
    """``G kappa_G(H)`` with ``kappa_G(x_0) = x_0`` and ``kappa_G(x_1) = G^{-1} x_1 G``."""
    if G.alphabet is not X or H.alphabet is not X:
        raise ValueError("ihara_mul takes series over X")
    if G.constant() != 1:
        raise ValueError("G must have constant term 1")
    W = min(G.bound, H.bound)
    G = G.truncate(W)
    images = {
        0: Series(X, {(0,): 1}, W, check=False),
        1: G.inverse() * Series(X, {(1,): 1}, W, check=False) * G,
    }
    kappa_h = Series(X, {}, W, check=False)
    for w, c in H.items():
        img = Series.one(X, W)
        for a in w:
            img = img * images[a]
        kappa_h = kappa_h + img.scale(c)
    return G * kappa_h


# ------------------------------------------------------ linearized spaces

def _kernel_polys(alphabet, words, rows) -> list:
    basis = kernel_basis(rows, ncols=len(words))
    return [Poly(alphabet, {w: c for w, c in zip(words, v) if c}, check=False) for v in basis]


def _product_rows(alphabet, rule, words, w):
    idx = {v: i for i, v in enumerate(words)}
    seen = set()
    for k in range(1, w):
        for u in enumerate_words(alphabet, k):
            for v in enumerate_words(alphabet, w - k):
                key = (u, v) if u <= v else (v, u)
                if key in seen:
                    continue
                seen.add(key)
                row = [Fraction(0)] * len(words)
                for t, c in qsh_terms(u, v, rule):
                    row[idx[t]] += c
                yield row


def linearized_dm0(w: int) -> list:
    """Basis of homogeneous weight-``w`` solutions of the first-order DM_0 conditions."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    words = list(enumerate_words(X, w))
    idx = {v: i for i, v in enumerate(words)}
    n = len(words)
    rows = []

    def unit(v, c=1):
        r = [Fraction(0)] * n
        r[idx[v]] = Fraction(c)
        return r

    for v in [(0,), (1,), (0, 1)]:
        if v in idx:
            rows.append(unit(v))
    rows.extend(_product_rows(X, Rule.SHUFFLE, words, w))
    # psi(f) = Pi_Y(f) + (-1)^{w-1}/w (Pi_Y f | y_w) y_1^w, paired with stuffles
    from .maps import iota_word

    corr = Fraction((-1) ** (w - 1), w) if w >= 2 else Fraction(0)
    seen = set()
    for k in range(1, w):
        for u in enumerate_words(Y, k):
            for v in enumerate_words(Y, w - k):
                key = (u, v) if u <= v else (v, u)
                if key in seen:
                    continue
                seen.add(key)
                r = [Fraction(0)] * n
                for t, c in qsh_terms(u, v, Rule.STUFFLE):
                    r[idx[iota_word(t)]] += c
                    if t == (1,) * w:
                        r[idx[iota_word((w,))]] += c * corr
                rows.append(r)
    if w == 0:
        rows.append(unit(()))
    return _kernel_polys(X, words, rows)


def linearized_bm0(w: int) -> list:
    """Basis of homogeneous weight-``w`` solutions of the first-order BM_0 conditions."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    words = list(enumerate_words(B, w))
    idx = {v: i for i, v in enumerate(words)}
    n = len(words)
    rows = []
    for v in [(0,), (2,), (4,), (6,)]:
        if v in idx:
            r = [Fraction(0)] * n
            r[idx[v]] = Fraction(1)
            rows.append(r)
    rows.extend(_product_rows(B, Rule.BALANCED, words, w))
    for v in words:
        if v and v[0] == 0:
            continue
        t = tau_word(v)
        if t > v:
            r = [Fraction(0)] * n
            r[idx[v]] += 1
            r[idx[t]] -= 1
            rows.append(r)
    if w == 0:
        r = [Fraction(0)] * n
        r[idx[()]] = Fraction(1)
        rows.append(r)
    return _kernel_polys(B, words, rows)


# ---------------------------------------------------------- grouplikes

def random_grouplike_x(bound: int, rng, size: int = 3) -> Series:
    """``exp`` of a random Lie polynomial in x_0, x_1 without linear x_1 term; grouplike for shuffle."""
    from .words import exp_conc

    def bracket(a: Poly, b: Poly) -> Poly:
        return a * b - b * a

    x0, x1 = Poly.word(X, (0,)), Poly.word(X, (1,))
    lie = [bracket(x0, x1)]
    while len(lie) < size + 2:
        lie.append(bracket(x0 if rng.random() < 0.5 else x1, lie[-1]))
    gen = Poly.zero(X)
    for L in lie:
        gen = gen + L.scale(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return exp_conc(gen, bound)


__all__ = [
    "Condition", "SchemeReport", "coefficient_is_zero", "phi_star", "check_dm", "check_bm",
    "correction_series", "theta_embed", "restrict_b01", "theta_inverse", "phi_zeta", "p_project", "p_project_word", "ihara_mul",
    "linearized_dm0", "linearized_bm0", "random_grouplike_x",
]
