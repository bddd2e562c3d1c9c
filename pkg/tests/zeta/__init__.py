"""Tests for the zeta package."""
