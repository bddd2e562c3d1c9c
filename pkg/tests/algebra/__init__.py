"""Tests for the algebra package."""
