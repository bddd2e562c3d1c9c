"""Tests for the command-line front end, configuration and reports."""
