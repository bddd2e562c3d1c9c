"""Tests for symmetric polynomials."""

from fractions import Fraction

import pytest
import sympy

from src.rsverify.algebra.partitions import Partition, partitions, partitions_up_to
from src.rsverify.algebra.polynomial import PolyRing
from src.rsverify.algebra.series import TruncSeries, ts_invert
from src.rsverify.algebra.symmetric import (
    complete_homogeneous,
    epoly,
    hpoly,
    schur,
    schur_tableaux,
    semistandard_tableaux,
)
from src.rsverify.core.errors import UsageError


@pytest.fixture
def ring():
    """Ring of a (2, 3) case."""
    return PolyRing.for_case(2, 3)


@pytest.fixture
def xs(ring):
    return ring.gens(["x1", "x2"])


@pytest.fixture
def ys(ring):
    return ring.gens(["y1", "y2", "y3"])


def test_hpoly_two_variables(xs):
    """Test h_2(x1, x2)."""
    x1, x2 = xs
    assert hpoly(2, xs) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert hpoly(0, xs) == 1


def test_complete_homogeneous_list(xs):
    """Test that the list form matches the single values."""
    hs = complete_homogeneous(4, xs)
    assert [hpoly(k, xs) for k in range(5)] == hs


def test_epoly(ys):
    """Test e_2 and e_4 in three variables."""
    y1, y2, y3 = ys
    assert epoly(2, ys) == y1 * y2 + y1 * y3 + y2 * y3
    assert epoly(4, ys) == 0


def test_negative_degree(xs):
    """Test that negative degrees are refused."""
    with pytest.raises(UsageError):
        hpoly(-1, xs)
    with pytest.raises(UsageError):
        epoly(-1, xs)


def test_empty_variables_need_ring():
    """Test that an empty variable list needs an explicit ring."""
    with pytest.raises(UsageError):
        hpoly(1, [])
    ring = PolyRing(["v"])
    assert hpoly(0, [], ring) == 1
    assert hpoly(2, [], ring) == 0


def test_schur_two_one(xs):
    """Test s_(2,1)(x1, x2)."""
    x1, x2 = xs
    assert schur(Partition((2, 1)), xs) == x1 ** 2 * x2 + x1 * x2 ** 2


def test_schur_too_many_rows(xs):
    """Test vanishing when the shape has more rows than variables."""
    assert schur(Partition((1, 1, 1)), xs) == 0
    assert schur(Partition(), xs) == 1


def test_schur_columns_are_elementary(ys):
    """Test s_(1^k) = e_k."""
    for k in range(4):
        assert schur(Partition((1,) * k), ys) == epoly(k, ys)


def test_semistandard_count():
    """Test the number of SSYT of shape (2,1) with entries from three values."""
    assert len(list(semistandard_tableaux(Partition((2, 1)), 3))) == 8


@pytest.mark.parametrize("size", [1, 2, 3, 4])
@pytest.mark.parametrize("weight", range(7))
def test_jacobi_trudi_matches_tableaux(size, weight):
    """Test the determinant formula against the tableau sum for weight <= 6 in <= 4 variables."""
    variables = PolyRing.for_case(1, 4).gens([f"y{j + 1}" for j in range(size)])
    for lam in partitions(weight):
        assert schur(lam, variables) == schur_tableaux(lam, variables), f"shape {lam}"


def test_schur_of_powers_and_constants(ring):
    """Test that variables may be powers or rational constants."""
    y1, y2 = ring.gens(["y1", "y2"])
    assert schur(Partition((1,)), [y1 ** 2, y2 ** 2]) == y1 ** 2 + y2 ** 2
    consts = [ring.const(Fraction(1, 2)), ring.const(3)]
    assert schur(Partition((2,)), consts) == Fraction(1, 4) + Fraction(3, 2) + 9


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_cauchy_identity(r, m):
    """Test sum of s_lam(x) s_lam(y) X^|lam| against prod (1 - x_i y_j X)^-1 at D = 6."""
    order = 6
    ring = PolyRing.for_case(r, m)
    xs = ring.gens([f"x{i + 1}" for i in range(r)])
    ys = ring.gens([f"y{j + 1}" for j in range(m)])
    coeffs = [ring.zero()] * (order + 1)
    for lam in partitions_up_to(order, max_rows=min(r, m)):
        coeffs[lam.weight] = coeffs[lam.weight] + schur(lam, xs) * schur(lam, ys)
    lhs = TruncSeries(ring, order, coeffs)

    rhs = TruncSeries.one(ring, order)
    for x in xs:
        for y in ys:
            rhs = rhs * ts_invert(TruncSeries.one(ring, order) - TruncSeries.monomial(ring, order, 1, x * y))
    assert lhs == rhs


def test_schur_against_bialternant():
    """Test Jacobi-Trudi against the bialternant formula computed independently."""
    ring = PolyRing(["a", "b", "c"], laurent=())
    ours = schur(Partition((3, 1)), ring.gens(["a", "b", "c"]))

    symbols = sympy.symbols("a b c")
    lam = (3, 1, 0)
    size = 3
    numerator = sympy.Matrix(size, size, lambda i, j: symbols[i] ** (lam[j] + size - 1 - j)).det()
    denominator = sympy.Matrix(size, size, lambda i, j: symbols[i] ** (size - 1 - j)).det()
    expected = sympy.Poly(sympy.cancel(numerator / denominator), *symbols)
    assert dict(ours.terms()) == {exps: Fraction(int(c)) for exps, c in expected.terms()}
