"""Zeta-integral evaluators, the Euler product and the case comparator."""

from .euler import euler_product
from .integrals import eval_I, eval_jpss, eval_tensor_integral_rank1
from .verify import run_identity_suite, run_structure_suite, verify_case

__all__ = [
    "euler_product",
    "eval_I",
    "eval_jpss",
    "eval_tensor_integral_rank1",
    "run_identity_suite",
    "run_structure_suite",
    "verify_case",
]
