"""Operations shared by the CLI and the HTTP service, returning output models."""

from fractions import Fraction
from typing import Iterable, Optional

from src.arith.rationals import format_rational
from src.arith.sorted_set import SortedRationalSet
from src.cli.schemas import (
    EpsilonOutput, ExtendOutput, InfoOutput, MembershipOutput, RsetOutput,
    SolveOutput, SupportPointOut, TraceStep, VerifyOutput,
    rationals_to_strings, series_to_terms,
)
from src.newton.polygon import build_polygon
from src.series.hahn import FiniteHahn
from src.series.operator import MahlerOperator
from src.solver.solve import greedy_extend, solve_on, verify_series
from src.supports.epsilon import lb_eps, lb_tau, seed_thetas
from src.supports.receptacle import v_membership_report
from src.supports.rset import compute_r


def _theta_strings(ctx) -> dict:
    return {str(k): format_rational(v) for k, v in sorted(ctx.theta.items())}


def info_report(L: MahlerOperator) -> InfoOutput:
    N = build_polygon(L)
    return InfoOutput(
        ell=L.ell,
        order=L.order,
        field=L.field.name,
        operator=L.to_expression(),
        points=[
            SupportPointOut(abscissa=p.abscissa, ordinate=p.ordinate,
                            coefficient=L.field.format(p.coeff), index=p.index)
            for p in N.points
        ],
        vertices=[list(v) for v in N.vertices],
        slopes=rationals_to_strings(N.slopes),
        alpha=list(N.alpha),
        beta=list(N.beta),
        d=N.d,
        minus_slopes=rationals_to_strings(N.minus_slopes()),
    )


def membership_report(L: MahlerOperator, v: Fraction, budget: Optional[int] = None) -> MembershipOutput:
    in_V, iota = v_membership_report(build_polygon(L), v, budget=budget)
    return MembershipOutput(v=format_rational(v), in_V=in_V, iota=iota)


def epsilon_report(L: MahlerOperator, v: Fraction, trace: bool = False) -> EpsilonOutput:
    N = build_polygon(L)
    ctx = seed_thetas(N, trace=trace)
    value = lb_eps(N, v, ctx=ctx)
    steps = None
    if trace:
        steps = [TraceStep(kind=kind, kappa0=k0, w=format_rational(w), bound=format_rational(b))
                 for kind, k0, w, b in ctx.trace_log]
    return EpsilonOutput(v=format_rational(v), value=format_rational(value),
                         theta=_theta_strings(ctx), trace=steps)


def tau_report(L: MahlerOperator) -> EpsilonOutput:
    N = build_polygon(L)
    ctx = seed_thetas(N)
    return EpsilonOutput(value=format_rational(lb_tau(N, ctx=ctx)), theta=_theta_strings(ctx))


def rset_report(L: MahlerOperator, E: SortedRationalSet, budget: Optional[int] = None) -> RsetOutput:
    run = compute_r(build_polygon(L), E, budget=budget)
    return RsetOutput(
        R=rationals_to_strings(run.final),
        levels=len(run.levels),
        M=run.M,
        H=run.H,
        N=format_rational(run.cap),
        tau_lb=format_rational(run.tau_lb),
        c_bound=run.c_bound,
        receptacle_size=run.receptacle_size,
        dropped_exponents=rationals_to_strings(run.dropped_exponents),
    )


def solve_report(L: MahlerOperator, E: SortedRationalSet, budget: Optional[int] = None) -> SolveOutput:
    basis = solve_on(L, E, budget=budget)
    return SolveOutput(
        dimension=basis.dimension,
        restricted_rank=basis.restricted_rank,
        R=rationals_to_strings(basis.R),
        basis=[series_to_terms(e.full, L.field) for e in basis.elements],
        restricted_basis=[series_to_terms(e.restricted, L.field) for e in basis.elements],
    )


def verify_report(L: MahlerOperator, f: FiniteHahn, E: SortedRationalSet,
                  budget: Optional[int] = None) -> VerifyOutput:
    N = build_polygon(L)
    run = compute_r(N, E, budget=budget)
    residual = verify_series(L, f, run.final, newton=N)
    return VerifyOutput(ok=len(residual) == 0, residual_exponents=rationals_to_strings(residual))


def extend_report(L: MahlerOperator, f0: FiniteHahn, bound: Fraction,
                  E: Optional[Iterable] = None, budget: Optional[int] = None) -> ExtendOutput:
    N = build_polygon(L)
    support = compute_r(N, E, budget=budget).final if E is not None else None
    f = greedy_extend(L, f0, bound, support=support, newton=N)
    return ExtendOutput(bound=format_rational(bound), series=series_to_terms(f, L.field))
