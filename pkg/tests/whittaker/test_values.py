"""Tests for the Whittaker-value oracles."""

import pytest

from src.rsverify.algebra.symmetric import hpoly
from src.rsverify.core.errors import UsageError
from src.rsverify.groups.cochar import Cochar
from src.rsverify.whittaker.parameters import ParameterSpace
from src.rsverify.whittaker.values import (
    WhittakerValue,
    cs_value,
    derive_rank1_coefficients,
    levi_value,
    speh_rank1_value,
    speh_torus_value,
)


@pytest.fixture
def space():
    """Symbolic parameters for r = 2, m = 3."""
    return ParameterSpace(2, 3)


def test_cs_value_gl2(space):
    """Test W(diag(p, 1)) = q^(-1/2) (x1 + x2)."""
    x1, x2 = space.x
    value = cs_value(space.x_params(), Cochar((1, 0)))
    assert value == WhittakerValue(x1 + x2, -1)
    assert value.poly(space.v) == (x1 + x2) * space.v ** -1


def test_cs_value_at_identity(space):
    """Test W(1) = 1."""
    assert cs_value(space.y_params(), Cochar((0, 0, 0))) == WhittakerValue.one(space.ring)


@pytest.mark.parametrize("vals", [(0, 1), (1, -1), (-1, -2)])
def test_cs_value_support(space, vals):
    """Test vanishing off dominant cocharacters with nonnegative last entry."""
    assert cs_value(space.x_params(), Cochar(vals)).is_zero()


def test_cs_value_errors(space):
    """Test a wrong length and a covering group."""
    with pytest.raises(UsageError):
        cs_value(space.x_params(), Cochar((1, 0, 0)))
    with pytest.raises(UsageError):
        cs_value(space.x_params(2), Cochar((1, 0)))


def test_speh_matches_cs_when_linear():
    """Test that for n = 1 the rank-one value is the Casselman-Shalika value at (k, 0, .., 0)."""
    for m in range(1, 5):
        space = ParameterSpace(1, m)
        params = space.y_params(1)
        for k in range(7):
            lam = Cochar((k,) + (0,) * (m - 1))
            assert speh_rank1_value(params, k) == cs_value(params, lam), f"m={m}, k={k}"


def test_speh_double_cover_gl2():
    """Test n = 2, m = 1, k = 1: the value y1^2 v^-1."""
    space = ParameterSpace(1, 1)
    y1 = space.y[0]
    assert speh_rank1_value(space.y_params(2), 1) == WhittakerValue(y1 ** 2, -1)
    assert speh_rank1_value(space.y_params(2), -1).is_zero()


def test_speh_torus_support(space):
    """Test that only multiples of n carry a value."""
    params = space.y_params(2)
    assert speh_torus_value(params, 3).is_zero()
    assert speh_torus_value(params, -2).is_zero()
    assert speh_torus_value(params, 4) == speh_rank1_value(params, 2)


def test_rank1_coefficients_match_speh_values():
    """Test the c_k solved from one Euler factor against the rank-one values."""
    for m in range(1, 4):
        for n in range(1, 4):
            if n * m == 1:
                continue
            space = ParameterSpace(1, m)
            params = space.y_params(n)
            coefficients = derive_rank1_coefficients(m, n, 12)
            assert len(coefficients) == 12 // n + 1
            for k, c in enumerate(coefficients):
                assert c == speh_rank1_value(params, k).poly(space.v), f"m={m}, n={n}, k={k}"


def test_rank1_coefficients_need_nm_above_one():
    """Test that GL_1 is refused."""
    with pytest.raises(UsageError):
        derive_rank1_coefficients(1, 1, 4)


def test_levi_value_single_block():
    """Test that r = 1 reduces to the rank-one value."""
    space = ParameterSpace(1, 2)
    params = space.y_params(1)
    for k in range(4):
        assert levi_value(params, 1, Cochar((k,))) == speh_rank1_value(params, k)


def test_levi_value_two_blocks(space):
    """Test the twist delta^(1/3) for (r,m,n) = (2,3,1) at a = (p, 1)."""
    params = space.y_params(1)
    value = levi_value(params, 2, Cochar((1, 0)))
    assert value == WhittakerValue(hpoly(1, space.y), -4)


def test_levi_value_vanishes_off_support(space):
    """Test that a valuation outside n*Z kills the product."""
    assert levi_value(space.y_params(2), 2, Cochar((2, 1))).is_zero()


def test_levi_value_errors(space):
    """Test the size checks."""
    with pytest.raises(UsageError):
        levi_value(space.y_params(1), 2, Cochar((1,)))
    single = ParameterSpace(1, 1)
    with pytest.raises(UsageError):
        levi_value(single.y_params(1), 1, Cochar((1,)))


def test_perturb_doubles_the_degree_one_value(space):
    """Test the deliberate corruption used to exercise the comparator."""
    params = space.x_params()
    honest = cs_value(params, Cochar((1, 0)))
    corrupted = cs_value(params, Cochar((1, 0)), perturb=True)
    assert corrupted == WhittakerValue(honest.schur_part.scale(2), honest.v_exponent)
    assert cs_value(params, Cochar((2, 0)), perturb=True) == cs_value(params, Cochar((2, 0)))
