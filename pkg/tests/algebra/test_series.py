"""Tests for truncated power series."""

import random
from fractions import Fraction

import pytest

from src.rsverify.algebra.polynomial import MPoly, PolyRing
from src.rsverify.algebra.series import TruncSeries, ts_arith, ts_invert
from src.rsverify.core.errors import InversionError, UsageError


@pytest.fixture
def ring():
    return PolyRing(["x1", "y1", "v"])


def series(ring, order, *coeffs):
    """Series from integer coefficients."""
    return TruncSeries(ring, order, [ring.const(c) for c in coeffs])


def test_padding_and_truncation(ring):
    """Test that coefficient lists are padded or cut to the order."""
    assert series(ring, 3, 1).coeffs == (ring.one(), ring.zero(), ring.zero(), ring.zero())
    assert series(ring, 1, 1, 2, 3).coeffs == (ring.one(), ring.const(2))


def test_geometric_series(ring):
    """Test (1 - X)^-1 = 1 + X + X^2 + ..."""
    assert ts_invert(series(ring, 4, 1, -1)) == series(ring, 4, 1, 1, 1, 1, 1)


def test_invert_with_polynomial_coefficient(ring):
    """Test (1 - x y X)^-1."""
    xy = ring.gen("x1") * ring.gen("y1")
    inverse = ts_invert(TruncSeries.one(ring, 3) - TruncSeries.monomial(ring, 3, 1, xy))
    assert inverse.coefficient(3) == xy ** 3


def test_invert_needs_unit_constant(ring):
    """Test that a constant term other than 1 is refused."""
    with pytest.raises(InversionError):
        series(ring, 2, 2, 1).invert()
    with pytest.raises(InversionError):
        series(ring, 2, 0, 1).invert()


def test_product_truncates(ring):
    """Test (1 + X)(1 - X) = 1 - X^2 up to the order."""
    assert series(ring, 1, 1, 1) * series(ring, 1, 1, -1) == series(ring, 1, 1)
    assert ts_arith(series(ring, 2, 1, 1), series(ring, 2, 1, -1), "mul") == series(ring, 2, 1, 0, -1)


def test_inverse_times_series_is_one(ring):
    """Test a * a^-1 = 1."""
    a = series(ring, 5, 1, 3, -2, 0, 7)
    assert a * a.invert() == TruncSeries.one(ring, 5)


def test_add_sub_neg(ring):
    """Test the additive operations."""
    a, b = series(ring, 2, 1, 2), series(ring, 2, 0, 1, 1)
    assert a + b == series(ring, 2, 1, 3, 1)
    assert ts_arith(a, b, "add") == a + b
    assert a - b == series(ring, 2, 1, 1, -1)
    assert -a == series(ring, 2, -1, -2)


def test_scalar_multiple(ring):
    """Test multiplication by a polynomial or int."""
    x = ring.gen("x1")
    assert (series(ring, 1, 1, 1) * x).coefficient(1) == x
    assert series(ring, 1, 1, 1) * 3 == series(ring, 1, 3, 3)
    assert series(ring, 1, 2, 4) * Fraction(1, 2) == series(ring, 1, 1, 2)
    assert Fraction(1, 2) * series(ring, 1, 2, 4) == series(ring, 1, 1, 2)


def test_order_and_ring_mismatch(ring):
    """Test that incompatible series do not combine."""
    with pytest.raises(UsageError):
        series(ring, 2, 1) + series(ring, 3, 1)
    other = PolyRing(["x1", "v"])
    with pytest.raises(UsageError):
        series(ring, 2, 1) * series(other, 2, 1)
    with pytest.raises(UsageError):
        ts_arith(series(ring, 2, 1), series(ring, 2, 1), "pow")


def test_negative_order(ring):
    """Test that the order must be nonnegative."""
    with pytest.raises(UsageError):
        TruncSeries(ring, -1)


def test_monomial_beyond_order(ring):
    """Test that X^d past the order vanishes."""
    assert TruncSeries.monomial(ring, 2, 5, ring.one()) == TruncSeries(ring, 2)


def test_differences(ring):
    """Test the list of differing degrees."""
    a, b = series(ring, 3, 1, 2, 3, 4), series(ring, 3, 1, 0, 3, 5)
    assert a.differences(b) == [(1, ring.const(2)), (3, ring.const(-1))]
    assert a.differences(a) == []


def test_specialize(ring):
    """Test substitution in every coefficient."""
    x, v = ring.gen("x1"), ring.gen("v")
    s = TruncSeries(ring, 1, [ring.one(), x * v ** -1])
    assert s.specialize({"x1": 2, "v": 4}) == TruncSeries(ring, 1, [ring.one(), ring.const(Fraction(1, 2))])


def test_digest_is_stable(ring):
    """Test that equal series share a digest and different ones do not."""
    a = series(ring, 3, 1, 2)
    assert a.digest() == series(ring, 3, 1, 2).digest()
    assert a.digest() != series(ring, 3, 1, 3).digest()
    assert len(a.digest()) == 16


def test_str(ring):
    """Test the rendering with the truncation marker."""
    x = ring.gen("x1")
    s = TruncSeries(ring, 2, [ring.one(), x + 1])
    assert str(s) == "1 + (x1 + 1)*X^1 + O(X^3)"


def random_unit_series(ring, order, rng):
    """Series with constant term 1 and random Laurent coefficients."""
    coeffs = [ring.one()]
    for _ in range(order):
        terms = {
            (rng.randint(0, 2), rng.randint(0, 2), rng.randint(-3, 3)): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for _ in range(rng.randint(0, 3))
        }
        coeffs.append(MPoly(ring, terms))
    return TruncSeries(ring, order, coeffs)


@pytest.mark.parametrize("seed", range(10))
def test_random_inverse_times_series_is_one(ring, seed):
    """Test ts_invert(a) * a = 1 for random unit-constant series."""
    a = random_unit_series(ring, 6, random.Random(seed))
    inverse = ts_invert(a)
    assert inverse * a == TruncSeries.one(ring, 6)
    assert a * inverse == TruncSeries.one(ring, 6)


def test_invert_with_negative_v_powers(ring):
    """Test (1 - v^-1 X)^-1 = sum v^-d X^d."""
    v = ring.gen("v")
    inverse = ts_invert(TruncSeries(ring, 4, [ring.one(), -(v ** -1)]))
    assert [inverse.coefficient(d) for d in range(5)] == [v ** -d for d in range(5)]


def test_invert_order_zero(ring):
    """Test that the order-0 inverse of 1 is 1."""
    assert ts_invert(TruncSeries.one(ring, 0)) == TruncSeries.one(ring, 0)
