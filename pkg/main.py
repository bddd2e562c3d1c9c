#!/usr/bin/env python3
"""
Rankin-Selberg Verification Engine - Main Entry Point

Checks unramified local zeta integrals against tensor product L-functions
with exact arithmetic, coefficient by coefficient.
"""

from src.rsverify.cli import main

if __name__ == '__main__':
    main()
