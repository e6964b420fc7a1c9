"""
Unit tests for the exhaustive self-dual (+)-ETGRS search.
"""
import pytest

from src.core.config import reset_settings
from src.core.exceptions import CapacityError, InvalidSpecError
from src.selfdual.refutation import DEGREE_COUNT_NOTE, refute_self_dual_etgrs, square_codes


class TestSquares:
    """Test the square classes used by the search."""

    def test_odd(self, gf5, gf7):
        """Test (q-1)/2 nonzero squares in odd characteristic."""
        assert square_codes(gf5) == [1, 4]
        assert square_codes(gf7) == [1, 2, 4]

    def test_even(self, gf4):
        """Test every nonzero element is a square in characteristic two."""
        assert square_codes(gf4) == [1, 2, 3]


class TestRefutation:
    """Test refute_self_dual_etgrs."""

    def test_gf5_dimension_three(self, gf5):
        """Test all [6,3] extended codes over GF(5) fail to be self-dual."""
        report = refute_self_dual_etgrs(gf5, 3)
        assert report.refuted
        assert report.n == 5
        assert report.gram_classes_checked == 128
        assert report.specs_covered == 4096
        assert report.note is None
        assert report.summary() == "no self-dual (+)-ETGRS found; 4096 specs checked"

    def test_gf4_dimension_two(self, gf4):
        """Test the k = 2 search runs and carries the degree-count note."""
        report = refute_self_dual_etgrs(gf4, 2)
        assert report.refuted
        assert report.gram_classes_checked == 324
        assert report.specs_covered == 324
        assert report.note == DEGREE_COUNT_NOTE

    def test_too_few_points(self, gf4):
        """Test q < 2k-1 leaves nothing to check."""
        report = refute_self_dual_etgrs(gf4, 3)
        assert report.gram_classes_checked == 0
        assert "no evaluation set" in report.note

    def test_budget(self, gf5, monkeypatch):
        """Test the configured budget bounds the search."""
        with pytest.raises(CapacityError):
            refute_self_dual_etgrs(gf5, 3, budget=10)
        monkeypatch.setenv("REFUTE_BUDGET", "100")
        reset_settings()
        with pytest.raises(CapacityError):
            refute_self_dual_etgrs(gf5, 3)

    def test_dimension_one(self, gf5):
        """Test k >= 2."""
        with pytest.raises(InvalidSpecError):
            refute_self_dual_etgrs(gf5, 1)

    def test_to_dict(self, gf5):
        """Test the JSON shape."""
        data = refute_self_dual_etgrs(gf5, 3).to_dict()
        assert data["found"] is None
        assert data["gram_classes_checked"] == 128
