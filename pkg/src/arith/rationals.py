"""
Exact rationals extended with +/-infinity, the ring Z_{d,l}, the depth
function h and the naive-height exponent sets E_N.
"""

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Union

from src.errors import DomainError
from src.arith.sorted_set import SortedRationalSet

RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ExtRational:
    """
    A reduced rational number or one of -inf, +inf.

    Compares and adds with ``int`` and ``Fraction`` operands. Infinite values
    absorb finite summands; ``inf - inf`` is undefined and raises.
    """

    __slots__ = ("_value", "_inf")

    def __init__(self, value: RationalLike = 0, inf: int = 0):
        if inf not in (-1, 0, 1):
            raise ValueError("inf must be -1, 0 or 1")
        self._inf = inf
        self._value = None if inf else Fraction(value)

    @classmethod
    def infinity(cls, sign: int = 1) -> "ExtRational":
        return cls(inf=1 if sign > 0 else -1)

    @classmethod
    def coerce(cls, x: Union["ExtRational", RationalLike]) -> "ExtRational":
        if isinstance(x, ExtRational):
            return x
        return cls(x)

    @property
    def is_finite(self) -> bool:
        return self._inf == 0

    @property
    def is_pos_inf(self) -> bool:
        return self._inf == 1

    @property
    def is_neg_inf(self) -> bool:
        return self._inf == -1

    def finite(self) -> Fraction:
        """The underlying fraction; raises on infinite values."""
        if self._inf:
            raise DomainError("infinite value has no finite part", self)
        return self._value

    def _key(self):
        # (inf-rank, value) gives a total order
        return (self._inf, self._value if self._value is not None else 0)

    @staticmethod
    def _other_key(other):
        if isinstance(other, ExtRational):
            return other._key()
        if isinstance(other, (int, Rational)):
            return (0, Fraction(other))
        return None

    def __eq__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() == key

    def __hash__(self):
        if self._inf:
            return hash(("ExtRational", self._inf))
        return hash(self._value)

    def __lt__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() < key

    def __le__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() <= key

    def __gt__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() > key

    def __ge__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() >= key

    def __neg__(self):
        if self._inf:
            return ExtRational(inf=-self._inf)
        return ExtRational(-self._value)

    def __add__(self, other):
        other = ExtRational.coerce(other)
        if self._inf and other._inf and self._inf != other._inf:
            raise DomainError("inf - inf is undefined")
        if self._inf:
            return self
        if other._inf:
            return other
        return ExtRational(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ExtRational.coerce(other))

    def __rsub__(self, other):
        return ExtRational.coerce(other) + (-self)

    def __mul__(self, other):
        factor = Fraction(other)
        if self._inf:
            if factor == 0:
                raise DomainError("0 * inf is undefined")
            return ExtRational(inf=self._inf if factor > 0 else -self._inf)
        return ExtRational(self._value * factor)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __repr__(self):
        return f"ExtRational({format_ext(self)})"

    def __str__(self):
        return format_ext(self)


POS_INF = ExtRational.infinity(1)
NEG_INF = ExtRational.infinity(-1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` (optional sign)."""
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise DomainError(f"not a rational number: {text!r}", text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise DomainError(f"zero denominator in {text!r}", text)
    return Fraction(numerator, denominator)


def parse_ext(text: str) -> ExtRational:
    stripped = text.strip().lower()
    if stripped in ("inf", "+inf"):
        return POS_INF
    if stripped == "-inf":
        return NEG_INF
    return ExtRational(parse_rational(text))


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_ext(x: Union[ExtRational, RationalLike]) -> str:
    x = ExtRational.coerce(x)
    if x.is_pos_inf:
        return "inf"
    if x.is_neg_inf:
        return "-inf"
    return format_rational(x.finite())


# ==================== Z_{d,l} ====================

def in_Zdl(v: RationalLike, d: int, ell: int) -> bool:
    """True iff d * ell^i * v is an integer for some i >= 0."""
    if d < 1 or ell < 2:
        raise DomainError(f"need d >= 1 and ell >= 2, got d={d}, ell={ell}")
    den = Fraction(v).denominator
    den //= gcd(den, d)
    g = gcd(den, ell)
    while g > 1:
        den //= g
        g = gcd(den, ell)
    return den == 1


def height_h(v: RationalLike, d: int, ell: int) -> int:
    """Least i >= 0 with d * ell^i * v integral."""
    v = Fraction(v)
    if not in_Zdl(v, d, ell):
        raise DomainError(f"{format_rational(v)} is not in Z_(d={d}, ell={ell})", v)
    i = 0
    scaled = d * v
    while scaled.denominator != 1:
        scaled *= ell
        i += 1
    return i


def depth_for_set(exponents: Iterable[RationalLike], d: int, ell: int) -> int:
    """Least H with ell^H * E inside (1/d)Z; 0 for the empty set."""
    return max((height_h(e, d, ell) for e in exponents), default=0)


def naive_height_set(N: int) -> SortedRationalSet:
    """All reduced a/b with max(|a|, |b|) <= N."""
    if N < 1:
        raise DomainError(f"naive height bound must be >= 1, got {N}", N)
    values = set()
    for b in range(1, N + 1):
        for a in range(-N, N + 1):
            if gcd(a, b) == 1 or a == 0:
                values.add(Fraction(a, b))
    return SortedRationalSet(values)
