from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gfmzv.linalg import RelationSpace, kernel_basis, rank, rref

small = st.integers(-3, 3).map(Fraction)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=5)
)


def sympy_rref(m):
    if not m:
        return [], []
    M, piv = sympy.Matrix(m).rref()
    rows = [[Fraction(int(x.p), int(x.q)) for x in M.row(i)] for i in range(len(piv))]
    return rows, list(piv)


def test_rref_examples():
    assert rref([[2, 0], [0, 0]]) == ([[1, 0]], [0])
    assert rref([[1, 2], [2, 4]]) == ([[1, 2]], [0])
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rref(eye) == (eye, [0, 1, 2])


def test_kernel_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    assert len(kernel_basis([[0, 0, 0], [0, 0, 0]])) == 3
    assert kernel_basis([[1, 1]]) == [[-1, 1]]
    with pytest.raises(ValueError):
        kernel_basis([])


@given(matrices)
def test_rref_matches_sympy(m):
    assert rref(m) == sympy_rref(m)


@given(matrices)
def test_kernel_dimension_and_annihilation(m):
    if not m:
        return
    ker = kernel_basis(m)
    assert len(ker) == len(m[0]) - rank(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(ker) == len(sympy.Matrix(m).nullspace())


def space(rows, keys="abcd"):
    return RelationSpace(list(keys[: len(rows[0])] if rows else keys), rows)


def test_in_span_examples():
    s = RelationSpace("abc", [[1, 2, 0], [0, 0, 1]])
    ok, coords = s.in_span([0, 0, 0])
    assert ok and not any(coords)
    ok, coords = s.in_span(s.dense_basis()[0])
    assert ok and coords == [1, 0]
    assert s.in_span([0, 1, 0]) == (False, None)


@given(matrices)
def test_relation_space_agrees_with_dense_rref(m):
    if not m:
        return
    s = space(m)
    rows, piv = rref(m)
    assert s.dim == len(rows) and s.pivots == piv
    assert s.dense_basis() == rows


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_reduce_contains_in_span(m, v):
    if not m:
        return
    n = len(m[0])
    v = v[:n]
    s = space(m)
    red = s.reduce(v)
    assert not set(red) & set(s.pivot_keys)
    assert s.contains(v) == (not red) == s.in_span(v)[0] == (rank(m + [v]) == rank(m))
    ok, coords = s.in_span(v)
    if ok:
        combo = [sum(c * r[j] for c, r in zip(coords, s.dense_basis())) for j in range(n)]
        assert combo == v


@given(matrices)
def test_equality_ignores_generator_order(m):
    if not m:
        return
    assert space(m) == space(list(reversed(m)))
    bigger = space(m)
    grew = bigger.add([1] + [0] * (len(m[0]) - 1))
    assert (bigger == space(m)) == (not grew)


def test_accepts_sparse_inputs():
    s = RelationSpace(["u", "v", "w"])
    assert s.add({"u": 1, "w": -1})
    assert not s.add({"w": 2, "u": -2})
    assert s.reduce({"u": 1}) == {"w": 1}
