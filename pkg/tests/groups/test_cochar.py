"""Tests for cocharacters and Weyl elements."""

import pytest

from src.rsverify.core.errors import StructureError, UsageError
from src.rsverify.groups.cochar import (
    Cochar,
    PermMat,
    build_w0,
    build_wJ,
    conj_cochar,
    embed_torus,
    t0_positions,
)


def triples(max_size):
    """All (n, m, r) with nrm <= max_size."""
    for n in range(1, max_size + 1):
        for m in range(1, max_size // n + 1):
            for r in range(1, max_size // (n * m) + 1):
                yield n, m, r


def test_cochar_basics():
    """Test padding, scaling and totals."""
    c = Cochar((2, 1))
    assert c.padded(4) == Cochar((2, 1, 0, 0))
    assert c.scaled(3) == Cochar((6, 3))
    assert c.total() == 3
    assert c.is_dominant()
    assert not Cochar((0, 1)).is_dominant()
    assert c + Cochar((1, 1)) == Cochar((3, 2))
    with pytest.raises(UsageError):
        c.padded(1)


def test_permutation_validation():
    """Test that a non-bijection is refused."""
    with pytest.raises(StructureError):
        PermMat((0, 0))


def test_inverse_and_compose():
    """Test the group law on a 3-cycle."""
    w = PermMat((1, 2, 0))
    assert w.compose(w.inverse()).is_identity()
    assert w.compose(w).compose(w).is_identity()
    assert w.entries() == {(1, 0), (2, 1), (0, 2)}


def test_wJ_small_cases():
    """Test w_J for a single 2-block, nm = 1 and two 2-blocks."""
    assert build_wJ(1, 2, 1).perm == (1, 0)
    assert build_wJ(1, 1, 3).is_identity()
    assert build_wJ(2, 1, 2).perm == (1, 0, 3, 2)


def test_w0_rank_one_is_identity():
    """Test that r = 1 forces w0 = 1."""
    for n, m in [(1, 2), (2, 3), (3, 1)]:
        assert build_w0(n, m, 1).is_identity()


def test_w0_entries_for_122():
    """Test the ones of w0 for (n,m,r) = (1,2,2), 0-based."""
    assert build_w0(1, 2, 2).entries() == {(0, 0), (2, 1), (1, 2), (3, 3)}


def test_w0_bijective_up_to_24():
    """Test that the entry rule is a bijection whenever nrm <= 24."""
    for n, m, r in triples(24):
        assert build_w0(n, m, r).size == n * m * r


def test_w0_rejects_bad_sizes():
    """Test that sizes must be positive."""
    with pytest.raises(UsageError):
        build_w0(0, 1, 1)


def test_conj_identity():
    """Test that the identity fixes every cocharacter."""
    c = Cochar((3, 1, 4))
    assert conj_cochar(PermMat.identity(3), c) == c


def test_conj_t0_for_122():
    """Test w0 t0 w0^-1 = diag(A_1, A_2) for (n,m,r) = (1,2,2)."""
    assert conj_cochar(build_w0(1, 2, 2), Cochar((5, 7, 0, 0))) == Cochar((5, 0, 7, 0))


def test_conj_group_law():
    """Test w (w^-1 c w) w^-1 = c."""
    w = build_w0(2, 1, 3)
    c = Cochar(tuple(range(6)))
    assert conj_cochar(w, conj_cochar(w.inverse(), c)) == c


def test_conj_size_mismatch():
    """Test that sizes must match."""
    with pytest.raises(UsageError):
        conj_cochar(PermMat.identity(2), Cochar((1, 2, 3)))


def test_interleaving_law_up_to_24():
    """Test that a_i lands in slot (i-1)nm + 1 and everything else is zero."""
    for n, m, r in triples(24):
        nm = n * m
        assert t0_positions(n, m, r) == tuple(i * nm for i in range(r))
        embedded = embed_torus(tuple(range(1, r + 1)), n, m, r)
        expected = [0] * (nm * r)
        for i in range(r):
            expected[i * nm] = i + 1
        assert embedded == Cochar(tuple(expected))
