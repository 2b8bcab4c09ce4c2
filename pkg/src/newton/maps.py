"""
The maps attached to P(L):

    Psi(v) = {v ell^i + j}      psi(v) = min Psi(v)      pi = psi^(-1)

and the predecessor candidates Delta(w) with their indices d_{w,w'}.
psi and pi are evaluated with the vertex-interval formulas; the direct
min/max scans are kept as the reference and used when the Newton data was
built with ``cross_check=True``.
"""

from fractions import Fraction
from typing import Union

from src.arith.rationals import ExtRational
from src.arith.sorted_set import SortedRationalSet
from src.errors import DomainError
from src.newton.polygon import NewtonData

Value = Union[int, Fraction, ExtRational]


def Psi(N: NewtonData, v) -> SortedRationalSet:
    v = Fraction(v)
    return SortedRationalSet(v * a + j for a, j in N.pairs)


def psi_direct(N: NewtonData, v) -> Fraction:
    v = Fraction(v)
    return min(v * a + j for a, j in N.pairs)


def pi_direct(N: NewtonData, q) -> Fraction:
    q = Fraction(q)
    return max((q - j) / a for a, j in N.pairs)


def _psi_interval(N: NewtonData, v: Fraction) -> Fraction:
    k = N.locate(v)
    return N.ell ** N.alpha[k - 1] * v + N.beta[k - 1]


def _pi_interval(N: NewtonData, q: Fraction) -> Fraction:
    k = N.locate_image(q)
    return (q - N.beta[k - 1]) / N.ell ** N.alpha[k - 1]


def psi(N: NewtonData, v: Value):
    """min Psi(v); psi(+inf) = +inf."""
    if isinstance(v, ExtRational):
        if not v.is_finite:
            return v
        return ExtRational(psi(N, v.finite()))
    v = Fraction(v)
    result = _psi_interval(N, v)
    if N.cross_check:
        expected = psi_direct(N, v)
        assert result == expected, f"psi({v}): interval {result} != direct {expected}"
    return result


def pi(N: NewtonData, q: Value):
    """max over P(L) of (q - j)/ell^i; pi(+inf) = +inf."""
    if isinstance(q, ExtRational):
        if not q.is_finite:
            return q
        return ExtRational(pi(N, q.finite()))
    q = Fraction(q)
    result = _pi_interval(N, q)
    if N.cross_check:
        expected = pi_direct(N, q)
        assert result == expected, f"pi({q}): interval {result} != direct {expected}"
    return result


def pi_of_Psi(N: NewtonData, v) -> SortedRationalSet:
    """pi(Psi(v)); its minimum is v."""
    return SortedRationalSet(pi(N, x) for x in Psi(N, v))


def Delta(N: NewtonData, w) -> SortedRationalSet:
    w = Fraction(w)
    image = psi(N, w)
    return SortedRationalSet((image - j) / a for a, j in N.pairs).difference((w,))


def d_index(N: NewtonData, w, wprime) -> int:
    """Least alpha with (psi(w) - beta)/ell^alpha = w' for some (ell^alpha, beta) in P(L)."""
    w, wprime = Fraction(w), Fraction(wprime)
    if wprime == w:
        raise DomainError(f"{wprime} is not in Delta({w})", wprime)
    image = psi(N, w)
    indices = [p.index for p in N.points if (image - p.ordinate) / p.abscissa == wprime]
    if not indices:
        raise DomainError(f"{wprime} is not in Delta({w})", wprime)
    return min(indices)
