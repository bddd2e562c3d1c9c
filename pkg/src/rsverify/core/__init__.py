"""Configuration, corpus handling, errors and suite orchestration."""
