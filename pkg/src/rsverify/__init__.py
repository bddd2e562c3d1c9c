"""
Rankin-Selberg verification engine.
Exact symbolic checks of unramified local zeta integrals against tensor product Euler factors.
"""

__version__ = "1.0.0"
__author__ = "rsverify developers"
