"""
HTTP surface for the solver: the CLI operations as JSON endpoints.
"""

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field, model_validator
from typing import List, Optional
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src import __version__
from src.arith.field import PrimeField, QQ
from src.arith.rationals import naive_height_set, parse_rational
from src.arith.sorted_set import SortedRationalSet
from src.cli import reports
from src.cli.expression import operator_from_strings, parse_operator
from src.cli.schemas import (
    EpsilonOutput, ExtendOutput, InfoOutput, MembershipOutput, RsetOutput,
    SeriesTerm, SolveOutput, VerifyOutput, terms_to_series,
)
from src.config import get_settings
from src.errors import BudgetExceededError, MahlersolError
from src.series.operator import MahlerOperator

logger = logging.getLogger(__name__)

# Initialize app
app = FastAPI(
    title="Mahlersol",
    description="Exact truncations of Hahn-series solutions of linear Mahler equations",
    version=__version__,
)

# CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ==================== REQUEST MODELS ====================

class OperatorRequest(BaseModel):
    ell: int = Field(ge=2)
    expression: Optional[str] = Field(default=None, description='e.g. "z*M^2 + (z-1)*M - 2"')
    coefficients: Optional[List[str]] = Field(default=None, description="coefficients[i] is a_i(z)")
    prime: Optional[int] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.expression is None) == (self.coefficients is None):
            raise ValueError("give exactly one of expression or coefficients")
        return self


class ExponentsRequest(OperatorRequest):
    exponents: Optional[List[str]] = None
    height: Optional[int] = Field(default=None, ge=1)
    budget: Optional[int] = Field(default=None, ge=1)


class ValueRequest(OperatorRequest):
    value: str
    trace: bool = False
    budget: Optional[int] = Field(default=None, ge=1)


class VerifyRequest(ExponentsRequest):
    series: List[SeriesTerm]


class ExtendRequest(ExponentsRequest):
    initial: List[SeriesTerm]
    bound: str


# ==================== HELPERS ====================

def _operator(request: OperatorRequest) -> MahlerOperator:
    field = PrimeField(request.prime) if request.prime else QQ
    if request.expression is not None:
        return parse_operator(request.expression, request.ell, field)
    return operator_from_strings(request.ell, request.coefficients, field)


def _exponents(request: ExponentsRequest) -> Optional[SortedRationalSet]:
    if request.height is not None:
        return naive_height_set(request.height)
    if request.exponents is not None:
        return SortedRationalSet(parse_rational(e) for e in request.exponents)
    return None


def _require_exponents(request: ExponentsRequest) -> SortedRationalSet:
    E = _exponents(request)
    if E is None:
        raise HTTPException(status_code=400, detail="give exponents or height")
    return E


def _budget(request) -> int:
    return request.budget if request.budget is not None else get_settings().memory_budget


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except BudgetExceededError as e:
        raise HTTPException(status_code=413, detail=str(e))
    except MahlersolError as e:
        raise HTTPException(status_code=400, detail=str(e))


# ==================== ENDPOINTS ====================

@app.get("/")
async def root():
    """Health check."""
    settings = get_settings()
    return {
        "service": "Mahlersol",
        "version": __version__,
        "status": "operational",
        "memory_budget": settings.memory_budget,
        "operations": ["info", "membership", "epsilon", "tau", "rset", "solve", "verify", "extend"],
    }


@app.post("/info", response_model=InfoOutput)
def info(request: OperatorRequest):
    """Newton polygon data."""
    return _run(lambda: reports.info_report(_operator(request)))


@app.post("/membership", response_model=MembershipOutput)
def membership(request: ValueRequest):
    """Decide whether an exponent lies in the receptacle."""
    return _run(lambda: reports.membership_report(
        _operator(request), parse_rational(request.value), budget=_budget(request)))


@app.post("/epsilon", response_model=EpsilonOutput)
def epsilon(request: ValueRequest):
    return _run(lambda: reports.epsilon_report(
        _operator(request), parse_rational(request.value), trace=request.trace))


@app.post("/tau", response_model=EpsilonOutput)
def tau(request: OperatorRequest):
    return _run(lambda: reports.tau_report(_operator(request)))


@app.post("/rset", response_model=RsetOutput)
def rset(request: ExponentsRequest):
    return _run(lambda: reports.rset_report(_operator(request), _require_exponents(request), budget=_budget(request)))


@app.post("/solve", response_model=SolveOutput)
def solve(request: ExponentsRequest):
    """Truncations of a basis of solutions to the requested exponents."""
    return _run(lambda: reports.solve_report(_operator(request), _require_exponents(request), budget=_budget(request)))


@app.post("/verify", response_model=VerifyOutput)
def verify(request: VerifyRequest):
    def _verify():
        L = _operator(request)
        E = _require_exponents(request)
        return reports.verify_report(L, terms_to_series(request.series, L.field), E, budget=_budget(request))

    return _run(_verify)


@app.post("/extend", response_model=ExtendOutput)
def extend(request: ExtendRequest):
    """Greedy extension of initial data on -S(L)."""
    def _extend():
        L = _operator(request)
        return reports.extend_report(L, terms_to_series(request.initial, L.field),
                                     parse_rational(request.bound), E=_exponents(request),
                                     budget=_budget(request))

    return _run(_extend)
