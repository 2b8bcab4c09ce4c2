"""Exact linear solve for the truncated solution space."""
from .linear import LinearSystem, assemble_system, kernel_basis, rref, rank
from .solve import (
    SolutionElement, SolutionBasis, solve_on, verify_series, greedy_extend, order_one_existence,
)

__all__ = [
    'LinearSystem', 'assemble_system', 'kernel_basis', 'rref', 'rank',
    'SolutionElement', 'SolutionBasis', 'solve_on', 'verify_series', 'greedy_extend',
    'order_one_existence',
]
