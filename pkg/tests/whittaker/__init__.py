"""Tests for the whittaker package."""
