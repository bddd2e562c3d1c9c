"""Test suite for the Rankin-Selberg verification engine."""
