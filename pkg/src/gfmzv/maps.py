"""Letterwise and block maps between Q<X>, Q<Y> and Q<B>.

All maps act on single words and extend linearly to ``Poly`` and ``Series``
(a ``Series`` keeps its weight bound; every map here preserves weight).
"""
from __future__ import annotations

from .words import B, X, Y, Poly


def _apply(p: Poly, fn, source, target):
    if p.alphabet is not source:
        raise ValueError(f"expected alphabet {source.name}, got {p.alphabet.name}")
    return p.map_words(fn, target)


# ------------------------------------------------------------------ tau

def b_blocks(w: tuple) -> list:
    """Split a word of B^0 into blocks ``b_k b_0^m``; returns ``[(k, m), ...]``."""
    if w and w[0] == 0:
        raise ValueError(f"word {w} starts with b_0; tau is only defined on Q<B>^0")
    blocks = []
    for a in w:
        if a:
            blocks.append([a, 0])
        else:
            blocks[-1][1] += 1
    return [tuple(b) for b in blocks]


def from_blocks(blocks) -> tuple:
    out = []
    for k, m in blocks:
        out.append(k)
        out.extend([0] * m)
    return tuple(out)


def tau_word(w: tuple) -> tuple:
    """``b_{k1} b_0^{m1} ... b_{kd} b_0^{md} -> b_{md+1} b_0^{kd-1} ... b_{m1+1} b_0^{k1-1}``."""
    return from_blocks((m + 1, k - 1) for k, m in reversed(b_blocks(w)))


def tau(p):
    """Involution on Q<B>^0, linear; a word starting with b_0 raises ``ValueError``."""
    if isinstance(p, tuple):
        return tau_word(B.check(p))
    return _apply(p, tau_word, B, B)


def pi0_word(w: tuple):
    return None if w and w[0] == 0 else w


def pi0(p):
    """Kill words starting with b_0."""
    return _apply(p, pi0_word, B, B)


def tau_after_pi0(p):
    return tau(pi0(p))


# --------------------------------------------------------- X <-> Y maps

def piY_word(w: tuple):
    """``x_0^{k1-1} x_1 ... x_0^{kd-1} x_1 -> y_{k1}...y_{kd}``; words ending in x_0 -> None."""
    if w and w[-1] == 0:
        return None
    out, run = [], 0
    for a in w:
        if a == 0:
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def piY(p):
    return _apply(p, piY_word, X, Y)


def iota_word(w: tuple) -> tuple:
    """Section of ``piY``: ``y_k -> x_0^{k-1} x_1``."""
    out = []
    for k in w:
        out.extend([0] * (k - 1))
        out.append(1)
    return tuple(out)


def iota(p):
    if isinstance(p, tuple):
        return iota_word(Y.check(p))
    return _apply(p, iota_word, Y, X)


# ------------------------------------------------------ embeddings into B

def theta_X(p):
    """x_i -> b_i."""
    return _apply(p, lambda w: w, X, B)


def theta_Y(p):
    """y_i -> b_i."""
    return _apply(p, lambda w: w, Y, B)


def theta_X_anti(p):
    """x_{e1}...x_{en} -> b_{en}...b_{e1}."""
    return _apply(p, lambda w: w[::-1], X, B)


def theta_X_anti_inverse_word(w: tuple):
    """Inverse of ``theta_X_anti`` on words over {b_0, b_1}; otherwise ``None``."""
    if any(a > 1 for a in w):
        return None
    return w[::-1]


def theta_Y_inverse_word(w: tuple):
    if any(a == 0 for a in w):
        return None
    return w


# -------------------------------------------------- projections out of B

def project_to_X_word(w: tuple):
    return None if any(a > 1 for a in w) else w


def project_to_Y_word(w: tuple):
    return None if 0 in w else w


def project_to_X(p):
    """b_0 -> x_0, b_1 -> x_1, b_i -> 0 for i >= 2."""
    return _apply(p, project_to_X_word, B, X)


def project_to_Y(p):
    """b_0 -> 0, b_i -> y_i for i >= 1."""
    return _apply(p, project_to_Y_word, B, Y)
