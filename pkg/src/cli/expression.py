"""
Recursive-descent parser for operator expressions such as

    z*M^2 + (z-1)*M - 2

over the atoms z, M, integer literals and parentheses, with + - * / ^.
Expressions are evaluated in the skew polynomial ring K[z]<M> where
M * f(z) = f(z^ell) * M. Division is only allowed by nonzero constants.
"""

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

from src.arith.field import Field, QQ
from src.errors import ExpressionSyntaxError, OperatorError
from src.series.operator import MahlerOperator, Polynomial

_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|(\*\*|[zM+\-*/^()])|(\S))")


class Token(NamedTuple):
    kind: str        # "num", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            break
        number, op, bad = match.groups()
        start = match.start(1) if number else match.start(2) if op else match.start(3)
        if bad is not None:
            raise ExpressionSyntaxError(f"unexpected character {bad!r}", start)
        if number is not None:
            tokens.append(Token("num", number, start))
        elif op is not None:
            tokens.append(Token("op", "^" if op == "**" else op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class SkewPolynomial:
    """sum_i a_i(z) M^i with M a(z) = a(z^ell) M."""

    def __init__(self, ell: int, terms: Optional[Dict[int, Polynomial]] = None):
        self.ell = ell
        self.terms = {i: p for i, p in (terms or {}).items() if not p.is_zero()}

    def __add__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        out = dict(self.terms)
        for i, p in other.terms.items():
            out[i] = out[i] + p if i in out else p
        return SkewPolynomial(self.ell, out)

    def __neg__(self) -> "SkewPolynomial":
        return SkewPolynomial(self.ell, {i: -p for i, p in self.terms.items()})

    def __sub__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        return self + (-other)

    def __mul__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        out: Dict[int, Polynomial] = {}
        for i, a in self.terms.items():
            for k, b in other.terms.items():
                product = a * b.compose_power(self.ell ** i)
                out[i + k] = out[i + k] + product if i + k in out else product
        return SkewPolynomial(self.ell, out)

    def constant_value(self):
        """The field constant this element equals, or None."""
        if not self.terms:
            return 0
        if set(self.terms) != {0}:
            return None
        p = self.terms[0]
        if p.degree != 0:
            return None
        return p.coefficient(0)


class _Parser:
    def __init__(self, text: str, ell: int, field: Field):
        self.tokens = tokenize(text)
        self.index = 0
        self.ell = ell
        self.field = field

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, text: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text == text:
            return self.advance()
        return None

    def constant(self, value) -> SkewPolynomial:
        return SkewPolynomial(self.ell, {0: Polynomial.constant(self.field.coerce(value))})

    def parse(self) -> SkewPolynomial:
        result = self.expr()
        if self.current.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {self.current.text!r}", self.current.position)
        return result

    def expr(self) -> SkewPolynomial:
        left = self.term()
        while True:
            if self.accept("+"):
                left = left + self.term()
            elif self.accept("-"):
                left = left - self.term()
            else:
                return left

    def term(self) -> SkewPolynomial:
        left = self.unary()
        while True:
            if self.accept("*"):
                left = left * self.unary()
                continue
            slash = self.accept("/")
            if slash is None:
                return left
            divisor = self.unary().constant_value()
            if divisor is None:
                raise OperatorError(
                    f"division by a non-constant at position {slash.position}: coefficients must be "
                    "polynomials, multiply the equation by a common denominator first",
                    reason="rational_function",
                )
            if not divisor:
                raise ExpressionSyntaxError("division by zero", slash.position)
            left = left * self.constant(self.field.one / self.field.coerce(divisor))

    def unary(self) -> SkewPolynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> SkewPolynomial:
        base = self.atom()
        caret = self.accept("^")
        if caret is None:
            return base
        if self.current.kind != "num":
            raise ExpressionSyntaxError("exponent must be a nonnegative integer literal", self.current.position)
        exponent = int(self.advance().text)
        result = self.constant(1)
        for _ in range(exponent):
            result = result * base
        return result

    def atom(self) -> SkewPolynomial:
        token = self.current
        if token.kind == "num":
            self.advance()
            return self.constant(Fraction(int(token.text)))
        if token.kind == "op" and token.text == "z":
            self.advance()
            return SkewPolynomial(self.ell, {0: Polynomial.monomial(self.field.one, 1)})
        if token.kind == "op" and token.text == "M":
            self.advance()
            return SkewPolynomial(self.ell, {1: Polynomial.constant(self.field.one)})
        if self.accept("("):
            inner = self.expr()
            if self.accept(")") is None:
                raise ExpressionSyntaxError("expected ')'", self.current.position)
            return inner
        if token.kind == "end":
            raise ExpressionSyntaxError("unexpected end of expression", token.position)
        raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)


def parse_skew(text: str, ell: int, field: Field = QQ) -> SkewPolynomial:
    return _Parser(text, ell, field).parse()


def parse_operator(text: str, ell: int, field: Field = QQ) -> MahlerOperator:
    """Parse and normalise to sum_i a_i(z) M^i."""
    if not isinstance(ell, int) or ell < 2:
        raise OperatorError(f"ell must be an integer >= 2, got {ell}", reason="bad_ell")
    skew = parse_skew(text, ell, field)
    if not skew.terms:
        raise OperatorError("the operator is zero", reason="zero_operator")
    n = max(skew.terms)
    coeffs = [skew.terms.get(i, Polynomial()) for i in range(n + 1)]
    return MahlerOperator(ell, coeffs, field)


def parse_polynomial(text: str, field: Field = QQ) -> Polynomial:
    """A coefficient a_i(z); M is not allowed."""
    skew = parse_skew(text, 2, field)
    if any(i != 0 for i in skew.terms):
        raise OperatorError(f"coefficient {text!r} must not contain M", reason="coefficient_has_M")
    return skew.terms.get(0, Polynomial())


def operator_from_strings(ell: int, coefficients: List[str], field: Field = QQ) -> MahlerOperator:
    """Operator from the file form: coefficients[i] is a_i(z)."""
    return MahlerOperator(ell, [parse_polynomial(c, field) for c in coefficients], field)
