"""Tests for parameter spaces."""

import pytest

from src.rsverify.algebra.series import TruncSeries
from src.rsverify.core.errors import UsageError
from src.rsverify.models.cases import Mode
from src.rsverify.whittaker.parameters import MAX_ENTRY, ParameterSpace, SatakeParams


def test_symbolic_space():
    """Test that symbolic parameters are the ring generators."""
    space = ParameterSpace(2, 3)
    assert space.symbolic
    assert [str(x) for x in space.x] == ["x1", "x2"]
    assert [str(y) for y in space.y] == ["y1", "y2", "y3"]
    assert str(space.v_power(-2)) == "v^-2"
    assert space.assignment == {}


def test_specialized_space_is_seeded():
    """Test that a seed fixes every drawn value."""
    a = ParameterSpace(2, 3, Mode.SPECIALIZED, seed=7)
    b = ParameterSpace(2, 3, "specialized", seed=7)
    assert a.assignment == b.assignment
    assert set(a.assignment) == {"x1", "x2", "y1", "y2", "y3", "v"}
    assert a.assignment != ParameterSpace(2, 3, Mode.SPECIALIZED, seed=8).assignment


def test_specialized_values():
    """Test nonzero values with small numerators and denominators, and v > 0."""
    space = ParameterSpace(3, 2, Mode.SPECIALIZED, seed=1)
    for name, value in space.assignment.items():
        assert value != 0
        assert abs(value.numerator) <= MAX_ENTRY
        assert value.denominator <= MAX_ENTRY
    assert space.assignment["v"] > 0
    assert space.x[0] == space.assignment["x1"]


def test_specialize_series():
    """Test evaluation of a symbolic series at the drawn point."""
    space = ParameterSpace(1, 1, Mode.SPECIALIZED, seed=3)
    symbolic = ParameterSpace(1, 1)
    x, y = symbolic.x[0], symbolic.y[0]
    series = TruncSeries(symbolic.ring, 1, [symbolic.ring.one(), x * y])
    expected = space.assignment["x1"] * space.assignment["y1"]
    assert space.specialize(series).coefficient(1) == expected
    with pytest.raises(UsageError):
        symbolic.specialize(series)


def test_satake_params():
    """Test powers and the consistency checks."""
    space = ParameterSpace(1, 2)
    params = space.y_params(3)
    assert params.powered() == [y ** 3 for y in space.y]
    assert params.ring == space.ring
    with pytest.raises(UsageError):
        SatakeParams(3, 1, list(space.y))
    with pytest.raises(UsageError):
        SatakeParams(2, 0, list(space.y))
