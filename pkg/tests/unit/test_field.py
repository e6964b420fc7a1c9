"""
Unit tests for finite field contexts and arithmetic helpers.
"""
import numpy as np
import pytest

from src.core.config import reset_settings
from src.core.exceptions import FieldDomainError, FieldParameterError
from src.gf.field import (
    codes,
    element_poly,
    element_table,
    field_create,
    field_from_order,
    field_generator,
    field_inv,
    field_trace,
    in_subfield,
    parse_codes,
    power,
    power_sum,
    powers_matrix,
    subfield_generator,
)


class TestFieldCreate:
    """Test construction and canonical moduli."""

    def test_prime_field(self, gf7):
        """Test a prime field."""
        assert gf7.q == 7
        assert gf7.modulus == (0, 1)
        assert gf7.name == "GF(7^1)"

    def test_gf4_modulus(self, gf4):
        """Test x^2 + x + 1 is chosen for GF(4)."""
        assert gf4.modulus == (1, 1, 1)

    def test_gf9_modulus(self, gf9):
        """Test x^2 + 1 is chosen for GF(9)."""
        assert gf9.modulus == (1, 0, 1)

    def test_gf8_modulus(self, gf8):
        """Test x^3 + x + 1 is chosen for GF(8)."""
        assert gf8.modulus == (1, 1, 0, 1)

    def test_cached(self):
        """Test the same context is returned for the same parameters."""
        assert field_create(3, 2) is field_create(3, 2)

    def test_invalid_parameters(self):
        """Test rejection of non-prime p, m = 0 and oversized q."""
        with pytest.raises(FieldParameterError):
            field_create(4, 1)
        with pytest.raises(FieldParameterError):
            field_create(3, 0)
        with pytest.raises(FieldParameterError):
            field_create(2, 21)

    def test_bound_from_settings(self, monkeypatch):
        """Test the order bound follows MAX_FIELD_ORDER."""
        monkeypatch.setenv("MAX_FIELD_ORDER", "16")
        reset_settings()
        with pytest.raises(FieldParameterError):
            field_create(5, 2)

    def test_from_order(self):
        """Test GF(q) from its order."""
        assert field_from_order(9).modulus == (1, 0, 1)
        with pytest.raises(FieldParameterError):
            field_from_order(6)

    def test_element_codes_validated(self, gf7):
        """Test codes outside [0, q) are rejected."""
        with pytest.raises(FieldDomainError):
            gf7([1, 7])


class TestArithmetic:
    """Test inverses, powers and generators."""

    def test_inverse(self, gf7, gf4):
        """Test inverses in GF(7) and GF(4)."""
        assert int(field_inv(gf7(3))) == 5
        assert int(field_inv(gf7(1))) == 1
        assert int(field_inv(gf4(2))) == 3

    def test_inverse_of_zero(self, gf7):
        """Test zero has no inverse."""
        with pytest.raises(FieldDomainError):
            field_inv(gf7(0))

    def test_inverse_round_trip(self, gf9):
        """Test a * a^{-1} = 1 for every nonzero element."""
        nonzero = gf9(np.arange(1, 9))
        assert np.all(nonzero * field_inv(nonzero) == 1)

    def test_generator(self, gf7, gf5, gf4, gf9):
        """Test smallest-code generators."""
        assert int(field_generator(gf7)) == 3
        assert int(field_generator(gf5)) == 2
        assert int(field_generator(gf4)) == 2
        assert int(field_generator(gf9)) == 4

    def test_generator_order(self, gf16):
        """Test the generator has order q - 1."""
        gamma = field_generator(gf16)
        orders = [e for e in range(1, 16) if int(gamma ** e) == 1]
        assert orders[0] == 15

    def test_zero_power_convention(self, gf7):
        """Test 0^0 = 1."""
        assert codes(power(gf7([0, 2]), 0)).tolist() == [1, 1]

    def test_powers_matrix(self, gf7):
        """Test rows of successive powers."""
        rows = powers_matrix(gf7([2, 3]), 3)
        assert codes(rows).tolist() == [[1, 1], [2, 3], [4, 2]]

    @pytest.mark.parametrize("p,m", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)])
    def test_power_sums(self, p, m):
        """Test sum of x^l over GF(q) is -1 when (q-1) | l and 0 otherwise."""
        ctx = field_create(p, m)
        q = ctx.q
        minus_one = int(-ctx.one())
        for exponent in range(1, 2 * q + 1):
            expected = minus_one if exponent % (q - 1) == 0 else 0
            assert int(power_sum(ctx, exponent)) == expected


class TestFieldAxioms:
    """Exhaustive axiom checks over every triple of elements."""

    @pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2)])
    def test_ring_axioms(self, p, m):
        """Test associativity, commutativity and distributivity."""
        ctx = field_create(p, m)
        x = ctx.elements()
        a, b, c = x[:, None, None], x[None, :, None], x[None, None, :]
        assert np.all((a + b) + c == a + (b + c))
        assert np.all((a * b) * c == a * (b * c))
        assert np.all(a * (b + c) == a * b + a * c)
        assert np.all(a + b == b + a)
        assert np.all(a * b == b * a)

    @pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (7, 1), (7, 2)])
    def test_identities_and_inverses(self, p, m):
        """Test 0 and 1 are identities and every nonzero element has an inverse."""
        ctx = field_create(p, m)
        x = ctx.elements()
        assert np.all(x + ctx.zero() == x)
        assert np.all(x * ctx.one() == x)
        assert np.all(x + (-x) == ctx.zero())
        assert np.all(x[1:] * field_inv(x[1:]) == ctx.one())
        assert sorted(codes(x).tolist()) == list(range(ctx.q))


class TestTrace:
    """Test the relative trace and subfields."""

    def test_trace_gf9(self, gf9):
        """Test Tr(x) = x^3 + x, its kernel and its fibers."""
        elements = gf9.elements()
        traces = field_trace(elements, 1)
        assert np.all(traces == elements ** 3 + elements)
        assert int(field_trace(gf9(0), 1)) == 0
        values = codes(traces).tolist()
        assert values.count(0) == 3
        assert all(values.count(c) == 3 for c in range(3))
        assert np.all(in_subfield(traces, 1))

    def test_trace_is_kernel_polynomial(self, gf9):
        """Test prod over the kernel of (x - a) evaluates to the trace."""
        elements = gf9.elements()
        kernel = elements[codes(field_trace(elements, 1)) == 0]
        differences = elements[:, np.newaxis] - kernel[np.newaxis, :]
        assert np.all(np.multiply.reduce(differences, axis=1) == field_trace(elements, 1))

    def test_trace_surjective_gf16(self, gf16):
        """Test Tr from GF(16) onto GF(4) has fibers of size 4."""
        values = codes(field_trace(gf16.elements(), 2)).tolist()
        image = sorted(set(values))
        assert len(image) == 4
        assert all(values.count(c) == 4 for c in image)

    def test_trace_degree_must_divide(self, gf9):
        """Test r must divide m."""
        with pytest.raises(FieldParameterError):
            field_trace(gf9.elements(), 3)

    def test_subfield(self, gf9):
        """Test the embedded GF(3) and its generator."""
        assert codes(gf9.elements()[in_subfield(gf9.elements(), 1)]).tolist() == [0, 1, 2]
        assert int(subfield_generator(gf9, 1)) == 2


class TestElementText:
    """Test element text and parsing."""

    def test_element_poly(self, gf9, gf4):
        """Test polynomial-basis text."""
        assert element_poly(gf9, 5) == "x + 2"
        assert element_poly(gf4, 3) == "x + 1"
        assert element_poly(gf9, 0) == "0"
        assert element_poly(field_create(2, 3), 4) == "x^2"

    def test_element_table(self, gf4):
        """Test the full table in code order."""
        assert element_table(gf4) == [(0, "0"), (1, "1"), (2, "x"), (3, "x + 1")]

    def test_parse_codes(self):
        """Test comma-separated parsing."""
        assert parse_codes("1, 2,3") == [1, 2, 3]
        assert parse_codes([4, 5]) == [4, 5]
        with pytest.raises(ValueError):
            parse_codes("1,a")
