"""
Polynomials in z and linear Mahler operators L = a_n M^n + ... + a_0,
where M acts by f(z) -> f(z^ell).
"""

from fractions import Fraction
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from src.arith.field import Field, QQ
from src.errors import OperatorError


class Polynomial:
    """Sparse polynomial with nonnegative integer exponents and no zero terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[int, Any]] = None):
        cleaned = {}
        for j, c in (terms or {}).items():
            if j < 0 or int(j) != j:
                raise OperatorError(f"polynomial exponent {j} is not a nonnegative integer",
                                    reason="negative_exponent")
            if c:
                cleaned[int(j)] = c
        self._terms = dict(sorted(cleaned.items()))

    @classmethod
    def constant(cls, c: Any) -> "Polynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Any, j: int) -> "Polynomial":
        return cls({j: c})

    def items(self) -> Iterator[Tuple[int, Any]]:
        return iter(self._terms.items())

    def coefficient(self, j: int) -> Any:
        return self._terms.get(j, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def val(self) -> int:
        """Least exponent; the zero polynomial has none."""
        if not self._terms:
            raise OperatorError("the zero polynomial has no valuation", reason="zero_polynomial")
        return next(iter(self._terms))

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return next(reversed(self._terms))

    def lowest_coefficient(self) -> Any:
        return self._terms[self.val]

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({j: fn(c) for j, c in self._terms.items()})

    def compose_power(self, k: int) -> "Polynomial":
        """p(z^k)."""
        return Polynomial({j * k: c for j, c in self._terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._terms)
        for j, c in other._terms.items():
            out[j] = out.get(j, 0) + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({j: -c for j, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: Dict[int, Any] = {}
        for j1, c1 in self._terms.items():
            for j2, c2 in other._terms.items():
                out[j1 + j2] = out.get(j1 + j2, 0) + c1 * c2
        return Polynomial(out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def to_expression(self, field: Field = QQ) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for j, c in reversed(list(self._terms.items())):
            text = field.format(c)
            if j == 0:
                pieces.append(text)
                continue
            power = "z" if j == 1 else f"z^{j}"
            if text == "1":
                pieces.append(power)
            elif text == "-1":
                pieces.append(f"-{power}")
            else:
                pieces.append(f"{text}*{power}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.to_expression()})"


class SupportPoint(NamedTuple):
    """A monomial a_{i,j} z^j M^i seen as the point (ell^i, j)."""
    abscissa: int
    ordinate: int
    coeff: Any
    index: int


class MahlerOperator:
    """
    L = sum_i a_i(z) M^i over a coefficient field.

    Construction enforces ell >= 2, order n >= 1 and a_0 * a_n != 0.
    """

    def __init__(self, ell: int, coeffs: Sequence[Polynomial], field: Field = QQ):
        if not isinstance(ell, int) or ell < 2:
            raise OperatorError(f"ell must be an integer >= 2, got {ell}", reason="bad_ell")
        coeffs = [p.map_coefficients(field.coerce) for p in coeffs]
        if len(coeffs) < 2:
            raise OperatorError("operator order must be at least 1 (a0*y = 0 only has y = 0)",
                                reason="order_zero")
        if coeffs[0].is_zero():
            raise OperatorError("a0 * an = 0: the coefficient a0 vanishes", reason="a0_zero")
        if coeffs[-1].is_zero():
            raise OperatorError("a0 * an = 0: the leading coefficient an vanishes", reason="an_zero")
        self.ell = ell
        self.field = field
        self.coeffs: Tuple[Polynomial, ...] = tuple(coeffs)
        self._points: Optional[List[SupportPoint]] = None

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def support_points(self) -> List[SupportPoint]:
        if self._points is None:
            self._points = [
                SupportPoint(self.ell ** i, j, c, i)
                for i, a in enumerate(self.coeffs)
                for j, c in a.items()
            ]
        return self._points

    def image_coefficient(self, gamma, delta) -> Any:
        """Coefficient of z^delta in L(z^gamma)."""
        gamma, delta = Fraction(gamma), Fraction(delta)
        total = self.field.zero
        for p in self.support_points():
            if gamma * p.abscissa + p.ordinate == delta:
                total = total + p.coeff
        return total

    def to_expression(self) -> str:
        pieces = []
        for i in range(self.order, -1, -1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            text = a.to_expression(self.field)
            if i == 0:
                pieces.append(f"({text})" if len(list(a.items())) > 1 else text)
                continue
            power = "M" if i == 1 else f"M^{i}"
            if text == "1":
                pieces.append(power)
            elif len(list(a.items())) == 1:
                pieces.append(f"{text}*{power}")
            else:
                pieces.append(f"({text})*{power}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __eq__(self, other):
        if not isinstance(other, MahlerOperator):
            return NotImplemented
        return self.ell == other.ell and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ell, self.coeffs))

    def __repr__(self):
        return f"MahlerOperator(ell={self.ell}, {self.to_expression()})"


def support_points(L: MahlerOperator) -> List[SupportPoint]:
    """P(L): one entry per nonzero monomial of each a_i."""
    return L.support_points()


def operator_from_coefficients(ell: int, coeffs: Sequence[Dict[int, Any]], field: Field = QQ) -> MahlerOperator:
    return MahlerOperator(ell, [Polynomial(c) for c in coeffs], field)
