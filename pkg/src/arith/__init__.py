"""Exact arithmetic: extended rationals, Z_{d,l}, sorted sets, fields."""
from .sorted_set import SortedRationalSet
from .rationals import (
    ExtRational, POS_INF, NEG_INF,
    parse_rational, parse_ext, format_rational, format_ext,
    in_Zdl, height_h, depth_for_set, naive_height_set,
)
from .field import Field, RationalField, PrimeField, ModularInteger, QQ

__all__ = [
    'SortedRationalSet', 'ExtRational', 'POS_INF', 'NEG_INF',
    'parse_rational', 'parse_ext', 'format_rational', 'format_ext',
    'in_Zdl', 'height_h', 'depth_for_set', 'naive_height_set',
    'Field', 'RationalField', 'PrimeField', 'ModularInteger', 'QQ',
]
