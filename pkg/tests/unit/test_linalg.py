"""
Unit tests for matrices over finite fields.
"""
import pytest

from src.core.exceptions import DimensionMismatchError
from src.linalg.matrix import (
    Matrix,
    rank,
    right_kernel,
    rref_rank,
    row_space_equal,
    solve_linear,
    vstack,
)


class TestMatrix:
    """Test matrix construction and products."""

    def test_from_codes(self, gf7):
        """Test shape and text form."""
        M = Matrix.from_codes(gf7, [[1, 2, 3], [4, 5, 6]])
        assert (M.rows, M.cols) == (2, 3)
        assert M.codes() == [[1, 2, 3], [4, 5, 6]]

    def test_product(self, gf7):
        """Test a product and its transpose."""
        A = Matrix.from_codes(gf7, [[1, 2], [3, 4]])
        B = Matrix.from_codes(gf7, [[5, 6], [0, 1]])
        assert (A @ B).codes() == [[5, 1], [1, 1]]
        assert A.transpose().codes() == [[1, 3], [2, 4]]

    def test_product_shape_mismatch(self, gf7):
        """Test inner dimensions are checked."""
        A = Matrix.from_codes(gf7, [[1, 2]])
        with pytest.raises(DimensionMismatchError):
            A @ A

    def test_product_over_different_fields(self, gf7, gf5):
        """Test operands must share a field."""
        with pytest.raises(DimensionMismatchError):
            Matrix.identity(gf7, 2) @ Matrix.identity(gf5, 2)

    def test_empty_product(self, gf7):
        """Test products with an empty dimension are zero matrices."""
        empty = Matrix.zeros(gf7, 0, 3)
        assert (empty @ Matrix.zeros(gf7, 3, 2)).rows == 0
        assert (Matrix.zeros(gf7, 2, 0) @ Matrix.zeros(gf7, 0, 2)).is_zero()


class TestReduction:
    """Test RREF, rank, kernels and solving."""

    def test_rank(self, gf7):
        """Test a rank-one matrix."""
        assert rank(Matrix.from_codes(gf7, [[1, 2], [2, 4]])) == 1
        assert rank(Matrix.identity(gf7, 3)) == 3

    def test_rref_pivots(self, gf7):
        """Test pivots are reported per nonzero row."""
        reduced, r, pivots = rref_rank(Matrix.from_codes(gf7, [[0, 2, 4], [0, 1, 3]]))
        assert r == 2
        assert pivots == [1, 2]
        assert reduced.codes() == [[0, 1, 0], [0, 0, 1]]

    def test_right_kernel(self, gf7):
        """Test M K^T = 0 and the kernel dimension."""
        M = Matrix.from_codes(gf7, [[1, 1, 1]])
        K = right_kernel(M)
        assert K.rows == 2
        assert (M @ K.transpose()).is_zero()

    def test_right_kernel_of_empty(self, gf7):
        """Test the kernel of a matrix with no rows is everything."""
        assert right_kernel(Matrix.zeros(gf7, 0, 3)).codes() == Matrix.identity(gf7, 3).codes()

    def test_solve(self, gf7):
        """Test a 2x2 system over GF(7)."""
        A = Matrix.from_codes(gf7, [[1, 1], [1, 2]])
        assert solve_linear(A, [6, 1]).tolist() == [4, 2]

    def test_solve_inconsistent(self, gf7):
        """Test an inconsistent system."""
        A = Matrix.from_codes(gf7, [[1, 1], [1, 1]])
        assert solve_linear(A, [1, 2]) is None

    def test_solve_free_variables_zero(self, gf7):
        """Test free variables are set to zero."""
        A = Matrix.from_codes(gf7, [[1, 0, 3]])
        assert solve_linear(A, [5]).tolist() == [5, 0, 0]

    def test_solve_length_mismatch(self, gf7):
        """Test the right-hand side length is checked."""
        with pytest.raises(DimensionMismatchError):
            solve_linear(Matrix.identity(gf7, 2), [1, 2, 3])

    def test_row_space_equal(self, gf7):
        """Test row spaces under scaling and row operations."""
        A = Matrix.from_codes(gf7, [[1, 2, 3], [0, 1, 1]])
        B = Matrix.from_codes(gf7, [[2, 4, 6], [1, 3, 4]])
        C = Matrix.from_codes(gf7, [[1, 0, 0], [0, 1, 1]])
        assert row_space_equal(A, B)
        assert not row_space_equal(A, C)

    def test_vstack(self, gf7):
        """Test stacking rows and blocks."""
        M = vstack(gf7, [gf7([1, 2]), gf7([[3, 4], [5, 6]])], 2)
        assert M.codes() == [[1, 2], [3, 4], [5, 6]]
