"""
Coefficient fields.

Algorithms only use ``+ - * /``, equality and truthiness on coefficients;
a ``Field`` supplies constants, coercion and the text format.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from src.errors import FieldError


class Field(ABC):
    name: str = "field"

    @property
    @abstractmethod
    def characteristic(self) -> int:
        ...

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Map an int, Fraction or field element into this field."""

    @abstractmethod
    def parse(self, text: str) -> Any:
        ...

    @abstractmethod
    def format(self, value: Any) -> str:
        ...

    @property
    def zero(self) -> Any:
        return self.coerce(0)

    @property
    def one(self) -> Any:
        return self.coerce(1)

    def is_zero(self, value: Any) -> bool:
        return not value

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    @property
    def characteristic(self) -> int:
        return 0

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, ModularInteger):
            raise FieldError(f"cannot coerce {value!r} into QQ")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        from src.arith.rationals import parse_rational
        return parse_rational(text)

    def format(self, value: Any) -> str:
        from src.arith.rationals import format_rational
        return format_rational(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class ModularInteger:
    """Element of Z/pZ for a prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _lift(self, other) -> "ModularInteger":
        if isinstance(other, ModularInteger):
            if other.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldError(f"{other} has no image in F_{self.p}")
            return ModularInteger(other.numerator * pow(other.denominator, -1, self.p), self.p)
        if isinstance(other, int):
            return ModularInteger(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModularInteger(self.value + other.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ModularInteger(-self.value, self.p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModularInteger(self.value - other.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModularInteger(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.value == 0:
            raise FieldError(f"division by zero in F_{self.p}")
        return ModularInteger(self.value * pow(other.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self.value == lifted.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.p}"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, value: Any) -> ModularInteger:
        if isinstance(value, ModularInteger):
            if value.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{value.p}")
            return value
        return ModularInteger(0, self.p)._lift(value if isinstance(value, (int, Fraction)) else Fraction(value))

    def parse(self, text: str) -> ModularInteger:
        from src.arith.rationals import parse_rational
        return self.coerce(parse_rational(text))

    def format(self, value: Any) -> str:
        return str(self.coerce(value).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
