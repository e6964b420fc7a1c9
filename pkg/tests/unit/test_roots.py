"""
Unit tests for square roots.
"""
import pytest

from src.core.config import reset_settings
from src.gf.field import codes, field_create
from src.gf.roots import field_sqrt, is_square, sqrt_vector


class TestFieldSqrt:
    """Test canonical square roots."""

    def test_gf7_values(self, gf7):
        """Test sqrt(2) = 3 and sqrt(3) is missing in GF(7)."""
        assert int(field_sqrt(gf7(2))) == 3
        assert field_sqrt(gf7(3)) is None
        assert int(field_sqrt(gf7(0))) == 0

    def test_even_field_frobenius(self, gf4, gf16):
        """Test sqrt(a) = a^(q/2) in characteristic 2."""
        for ctx in (gf4, gf16):
            for value in range(ctx.q):
                a = ctx(value)
                root = field_sqrt(a)
                assert root == a ** (ctx.q // 2)
                assert root * root == a

    @pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2), (11, 1), (5, 2)])
    def test_square_count(self, p, m):
        """Test exactly (q+1)/2 elements have a root and each root squares back."""
        ctx = field_create(p, m)
        found = 0
        for value in range(ctx.q):
            root = field_sqrt(ctx(value))
            if root is not None:
                found += 1
                assert int(root * root) == value
                assert int(root) <= int(-root)
        assert found == (ctx.q + 1) // 2

    def test_library_path_matches_table(self, monkeypatch):
        """Test the galois path gives the same canonical roots."""
        ctx = field_create(13, 1)
        table_roots = [field_sqrt(ctx(value)) for value in range(13)]
        monkeypatch.setenv("SQRT_TABLE_LIMIT", "2")
        reset_settings()
        computed = [field_sqrt(ctx(value)) for value in range(13)]
        assert [None if r is None else int(r) for r in computed] == [
            None if r is None else int(r) for r in table_roots
        ]

    def test_library_path_extension_field(self, monkeypatch):
        """Test the galois path in GF(25) where q-1 = 3 * 2^3."""
        monkeypatch.setenv("SQRT_TABLE_LIMIT", "2")
        reset_settings()
        ctx = field_create(5, 2)
        for value in range(1, 25):
            root = field_sqrt(ctx(value))
            if root is not None:
                assert int(root * root) == value

    def test_canonical_root_above_table(self):
        """Test GF(1031) roots are the smaller of the two, found by brute force."""
        ctx = field_create(1031, 1)
        x = ctx.elements()
        squares = codes(x * x)
        for value in range(1, 60):
            roots = codes(x)[squares == value]
            root = field_sqrt(ctx(value))
            if roots.size == 0:
                assert root is None
            else:
                assert int(root) == int(roots.min())


class TestHelpers:
    """Test square-root helpers."""

    def test_is_square(self, gf7, gf4):
        """Test squares in odd and even characteristic."""
        assert [is_square(gf7(v)) for v in range(7)] == [True, True, True, False, True, False, False]
        assert all(is_square(gf4(v)) for v in range(4))

    def test_sqrt_vector(self, gf7):
        """Test vector roots and the all-or-nothing result."""
        assert sqrt_vector(gf7, [1, 2, 4]).tolist() == [1, 3, 2]
        assert sqrt_vector(gf7, [1, 3]) is None
