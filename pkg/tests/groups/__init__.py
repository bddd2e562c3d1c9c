"""Tests for the groups package."""
