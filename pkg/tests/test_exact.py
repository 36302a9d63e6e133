from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedhopf.exact import DimensionError, NoSolution, RationalMatrix, kernel_basis, rank, row_space_rank, solve


def small_matrices():
    return st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_kernel_examples():
    assert kernel_basis(RationalMatrix.identity(3)) == []
    assert len(kernel_basis(RationalMatrix.from_dense([[0, 0, 0], [0, 0, 0]]))) == 3
    (v,) = kernel_basis(RationalMatrix.from_dense([[1, 1], [1, 1]]))
    assert row_space_rank([dict(enumerate(v)), {0: 1, 1: -1}]) == 1


def test_rank_and_solve_examples():
    assert rank(RationalMatrix.identity(4)) == 4
    assert solve(RationalMatrix.from_dense([[2]]), [1]) == [Fraction(1, 2)]
    with pytest.raises(NoSolution):
        solve(RationalMatrix.from_dense([[1], [1]]), [1, 2])
    with pytest.raises(DimensionError):
        solve(RationalMatrix.from_dense([[1, 2]]), [1, 2])


@settings(max_examples=150)
@given(small_matrices())
def test_rank_nullity_against_sympy(rows):
    A = RationalMatrix.from_dense(rows)
    ker = kernel_basis(A)
    oracle = sympy.Matrix(rows)
    assert rank(A) == oracle.rank()
    assert rank(A) + len(ker) == A.ncols
    for v in ker:
        assert all(x == 0 for x in A.apply(v))


@settings(max_examples=100)
@given(small_matrices(), st.data())
def test_solve_is_exact(rows, data):
    A = RationalMatrix.from_dense(rows)
    x0 = data.draw(st.lists(st.integers(-4, 4), min_size=A.ncols, max_size=A.ncols))
    b = A.apply(x0)
    x = solve(A, b)
    assert A.apply(x) == b


def test_kernel_is_deterministic_and_reduced():
    A = RationalMatrix.from_dense([[1, 2, 3, 4], [2, 4, 6, 8], [0, 0, 1, 1]])
    first = kernel_basis(A)
    assert first == kernel_basis(A)
    # one vector per free column, with a leading one
    assert len(first) == 2
    for v in first:
        lead = next(x for x in v if x)
        assert lead == 1


def test_row_space_rank_on_keyed_vectors():
    assert row_space_rank([{"a": 1, "b": 1}, {"a": 2, "b": 2}, {"c": 1}]) == 2
    assert row_space_rank([]) == 0
