"""
Finite-support generalized series sum_gamma f_gamma z^gamma with rational
exponents, and the action of a Mahler operator on them.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Tuple

from src.arith.rationals import ExtRational, POS_INF
from src.arith.sorted_set import SortedRationalSet
from src.series.operator import MahlerOperator


class FiniteHahn:
    """Immutable sparse series; terms iterate by increasing exponent."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Any, Any] = None):
        cleaned = {Fraction(e): c for e, c in (terms or {}).items() if c}
        self._terms = dict(sorted(cleaned.items()))

    @classmethod
    def zero(cls) -> "FiniteHahn":
        return cls()

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "FiniteHahn":
        return cls({exponent: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Any, Any]]) -> "FiniteHahn":
        acc: Dict[Fraction, Any] = {}
        for e, c in pairs:
            e = Fraction(e)
            acc[e] = acc[e] + c if e in acc else c
        return cls(acc)

    def items(self) -> Iterator[Tuple[Fraction, Any]]:
        return iter(self._terms.items())

    def coefficient(self, exponent) -> Any:
        return self._terms.get(Fraction(exponent), 0)

    def support(self) -> SortedRationalSet:
        return SortedRationalSet.from_sorted(list(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "FiniteHahn") -> "FiniteHahn":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return FiniteHahn(out)

    def __neg__(self) -> "FiniteHahn":
        return FiniteHahn({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "FiniteHahn") -> "FiniteHahn":
        return self + (-other)

    def scale(self, c) -> "FiniteHahn":
        return FiniteHahn({e: c * v for e, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FiniteHahn):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "FiniteHahn(0)"
        body = " + ".join(f"{c}*z^({e})" for e, c in self._terms.items())
        return f"FiniteHahn({body})"


def val(f: FiniteHahn) -> ExtRational:
    """Least exponent of f; +inf for the zero series."""
    for e, _ in f.items():
        return ExtRational(e)
    return POS_INF


def restrict(f: FiniteHahn, Q: Iterable) -> FiniteHahn:
    """res_Q f: the terms whose exponent lies in Q."""
    if not isinstance(Q, SortedRationalSet):
        Q = SortedRationalSet(Q)
    return FiniteHahn({e: c for e, c in f.items() if e in Q})


def mahler_substitute(f: FiniteHahn, ell: int, i: int = 1) -> FiniteHahn:
    """f(z^(ell^i))."""
    factor = ell ** i
    return FiniteHahn({e * factor: c for e, c in f.items()})


def apply_operator(L: MahlerOperator, f: FiniteHahn) -> FiniteHahn:
    """L(f) = sum_i a_i(z) f(z^(ell^i)), with exact cancellation."""
    acc: Dict[Fraction, Any] = {}
    for gamma, c in f.items():
        for p in L.support_points():
            e = gamma * p.abscissa + p.ordinate
            term = p.coeff * c
            acc[e] = acc[e] + term if e in acc else term
    return FiniteHahn(acc)


def linear_combination(pairs: Iterable[Tuple[Any, FiniteHahn]]) -> FiniteHahn:
    total = FiniteHahn()
    for c, f in pairs:
        total = total + f.scale(c)
    return total

