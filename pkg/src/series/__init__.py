"""Polynomials, Mahler operators and finite Hahn series."""
from .operator import Polynomial, MahlerOperator, SupportPoint, support_points, operator_from_coefficients
from .hahn import FiniteHahn, val, restrict, mahler_substitute, apply_operator, linear_combination

__all__ = [
    'Polynomial', 'MahlerOperator', 'SupportPoint', 'support_points', 'operator_from_coefficients',
    'FiniteHahn', 'val', 'restrict', 'mahler_substitute', 'apply_operator', 'linear_combination',
]
