"""Command-line surface: expression parser, JSON schemas, commands."""
from .expression import parse_operator, parse_polynomial, operator_from_strings, tokenize

__all__ = ['parse_operator', 'parse_polynomial', 'operator_from_strings', 'tokenize']
