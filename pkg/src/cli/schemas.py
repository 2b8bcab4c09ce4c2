"""
JSON documents: the operator file, the series file and the command outputs.
Rationals are always strings "a/b" so no precision is lost.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.arith.field import Field as CoefficientField
from src.arith.rationals import format_rational, parse_rational
from src.series.hahn import FiniteHahn


class OperatorFile(BaseModel):
    ell: int = Field(ge=2)
    coefficients: List[str] = Field(min_length=2, description="coefficients[i] is a_i(z)")
    prime: Optional[int] = Field(default=None, description="work over GF(prime) instead of QQ")


class SeriesTerm(BaseModel):
    exponent: str
    coefficient: str


class SupportPointOut(BaseModel):
    abscissa: int
    ordinate: int
    coefficient: str
    index: int


class InfoOutput(BaseModel):
    ell: int
    order: int
    field: str
    operator: str
    points: List[SupportPointOut]
    vertices: List[List[int]]
    slopes: List[str]
    alpha: List[int]
    beta: List[int]
    d: int
    minus_slopes: List[str]


class MembershipOutput(BaseModel):
    v: str
    in_V: bool
    iota: Optional[int] = None


class TraceStep(BaseModel):
    kind: str
    kappa0: int
    w: str
    bound: str


class EpsilonOutput(BaseModel):
    v: Optional[str] = None
    value: str
    theta: Dict[str, str]
    trace: Optional[List[TraceStep]] = None


class RsetOutput(BaseModel):
    R: List[str]
    levels: int
    M: int
    H: int
    N: str
    tau_lb: str
    c_bound: int
    receptacle_size: int
    dropped_exponents: List[str] = Field(default_factory=list)


class SolveOutput(BaseModel):
    dimension: int
    restricted_rank: int
    R: List[str]
    basis: List[List[SeriesTerm]]
    restricted_basis: List[List[SeriesTerm]]


class VerifyOutput(BaseModel):
    ok: bool
    residual_exponents: List[str]


class ExtendOutput(BaseModel):
    bound: str
    series: List[SeriesTerm]


class ErrorOutput(BaseModel):
    error: str
    kind: str


def series_to_terms(f: FiniteHahn, field: CoefficientField) -> List[SeriesTerm]:
    return [SeriesTerm(exponent=format_rational(e), coefficient=field.format(c)) for e, c in f.items()]


def terms_to_series(terms: List[SeriesTerm], field: CoefficientField) -> FiniteHahn:
    return FiniteHahn.from_pairs((parse_rational(t.exponent), field.parse(t.coefficient)) for t in terms)


def rationals_to_strings(values) -> List[str]:
    return [format_rational(v) for v in values]
