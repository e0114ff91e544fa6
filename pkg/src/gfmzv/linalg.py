"""Exact rational linear algebra.

Dense helpers (``rref``, ``rank``, ``kernel_basis``) work on lists of rows.
``RelationSpace`` holds a subspace of a graded piece with a named ambient
basis and sparse rows; the pivot of a row is its first nonzero column in
ambient order.  Reducing a vector against it gives a canonical normal form
supported on non-pivot columns.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from gmpy2 import mpq


def _q(c):
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _frac_rows(m) -> list:
    rows = [[Fraction(x) for x in r] for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix is not rectangular")
    return rows


def rref(m: Sequence[Sequence]) -> tuple:
    """Reduced row-echelon form over Q; returns ``(rows, pivots)`` with zero rows dropped."""
    rows = _frac_rows(m)
    ncols = len(rows[0]) if rows else 0
    pivots: list = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of the right null space; ``ncols`` is needed when ``m`` has no rows."""
    rows, pivots = rref(m)
    n = len(m[0]) if len(m) else ncols
    if n is None:
        raise ValueError("ncols required for an empty matrix")
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class RelationSpace:
    """Subspace of the span of ``ambient`` (a list of hashable basis keys).

    Rows are stored in echelon form (each row normalized to 1 at its pivot,
    zero before it) with ``gmpy2.mpq`` entries; the fully reduced basis is
    computed on demand.  Reduction of a vector against the echelon rows
    already yields the unique representative vanishing on all pivots.
    """

    def __init__(self, ambient: Iterable[Hashable], rows: Iterable = ()):
        self.ambient = list(ambient)
        self.index = {k: i for i, k in enumerate(self.ambient)}
        if len(self.index) != len(self.ambient):
            raise ValueError("ambient basis has repeated keys")
        self._rows: dict = {}  # pivot column -> {column: mpq}
        self._rref = None
        for r in rows:
            self.add(r)

    # -- conversions

    def _sparse(self, v) -> dict:
        """Accept a dense list, a ``{key: coeff}`` dict, or anything with ``.terms``."""
        if hasattr(v, "terms"):
            v = v.terms
        if isinstance(v, dict):
            out = {}
            for k, c in v.items():
                if c:
                    if k not in self.index:
                        raise ValueError(f"{k!r} is not in the ambient basis")
                    out[self.index[k]] = _q(c)
            return out
        if len(v) != len(self.ambient):
            raise ValueError(f"dimension mismatch: {len(v)} != {len(self.ambient)}")
        return {i: _q(c) for i, c in enumerate(v) if c}

    def _keyed(self, d: dict) -> dict:
        return {self.ambient[i]: _frac(c) for i, c in sorted(d.items())}

    # -- core

    def _reduce_sparse(self, d: dict) -> dict:
        rows = self._rows
        heap = [c for c in d if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            f = d.get(c)
            if not f:
                continue
            for j, a in rows[c].items():
                x = d.get(j, 0) - f * a
                if x:
                    if j not in d and j in rows:
                        heapq.heappush(heap, j)
                    d[j] = x
                else:
                    d.pop(j, None)
        return d

    def add(self, v) -> bool:
        """Insert a vector; returns True when it enlarged the space."""
        d = self._reduce_sparse(self._sparse(v))
        if not d:
            return False
        p = min(d)
        inv = 1 / d[p]
        self._rows[p] = {j: a * inv for j, a in d.items()}
        self._rref = None
        return True

    def add_many(self, vs: Iterable) -> None:
        for v in vs:
            self.add(v)

    def _reduced_rows(self) -> dict:
        if self._rref is None:
            done: dict = {}
            for p in sorted(self._rows, reverse=True):
                row = dict(self._rows[p])
                for c in [c for c in row if c != p and c in done]:
                    f = row.get(c)
                    if not f:
                        continue
                    for j, a in done[c].items():
                        x = row.get(j, 0) - f * a
                        if x:
                            row[j] = x
                        else:
                            row.pop(j, None)
                done[p] = row
            self._rref = done
        return self._rref

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return sorted(self._rows)

    @property
    def pivot_keys(self) -> list:
        return [self.ambient[p] for p in self.pivots]

    def basis(self) -> list:
        """RREF rows as ``{key: Fraction}`` dicts, ordered by pivot."""
        rr = self._reduced_rows()
        return [self._keyed(rr[p]) for p in self.pivots]

    def dense_basis(self) -> list:
        out = []
        for row in self.basis():
            dense = [Fraction(0)] * len(self.ambient)
            for k, a in row.items():
                dense[self.index[k]] = a
            out.append(dense)
        return out

    def reduce(self, v) -> dict:
        """Normal form: ``v`` minus its projection, as ``{key: coeff}`` on non-pivot keys."""
        return self._keyed(self._reduce_sparse(self._sparse(v)))

    def contains(self, v) -> bool:
        return not self._reduce_sparse(self._sparse(v))

    def in_span(self, v) -> tuple:
        """``(True, coords)`` with coordinates against :meth:`basis`, else ``(False, None)``."""
        d = self._sparse(v)
        coords = [_frac(d.get(p, 0)) for p in self.pivots]
        if self._reduce_sparse(d):
            return False, None
        return True, coords

    def __eq__(self, other):
        return (
            isinstance(other, RelationSpace)
            and self.ambient == other.ambient
            and self._reduced_rows() == other._reduced_rows()
        )

    __hash__ = None

    def __repr__(self):
        return f"RelationSpace(dim={self.dim}, ambient={len(self.ambient)})"
