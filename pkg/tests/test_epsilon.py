from fractions import Fraction as F

import pytest

from src.arith.rationals import in_Zdl
from src.cli.expression import parse_operator
from src.errors import DomainError
from src.newton.polygon import build_polygon
from src.supports.epsilon import (
    EpsilonContext,
    lb_eps,
    lb_eps_interval,
    lb_eps_param,
    lb_tau,
    seed_thetas,
)
from src.supports.receptacle import compute_v, iota_bound
from tests.conftest import INTRO_EXAMPLE, RUDIN_SHAPIRO


@pytest.fixture(scope="module")
def rs_context(rs_newton):
    return seed_thetas(rs_newton)


def test_rudin_shapiro_thetas(rs_context):
    assert rs_context.theta == {2: F(1, 4), 1: F(1, 2)}


@pytest.mark.parametrize("v,bound", [(F(-3, 4), F(1, 4)), (F(-1, 2), F(1, 4)), (F(0), F(1, 2))])
def test_lb_eps_param(rs_context, v, bound):
    assert lb_eps_param(rs_context, 0, v) == bound


@pytest.mark.parametrize("w,bound", [(F(-1, 4), F(1, 8)), (F(-3, 8), F(1, 8)), (F(-3, 4), F(1, 4))])
def test_lb_eps_interval(rs_context, w, bound):
    assert lb_eps_interval(rs_context, 1, w) == (w, bound)


@pytest.mark.parametrize("v,bound", [(F(-1, 4), F(1, 8)), (F(-3, 4), F(1, 4)), (F(0), F(1, 2))])
def test_lb_eps(rs_newton, v, bound):
    assert lb_eps(rs_newton, v) == bound


def test_tau(rs_newton, constant_newton, intro_newton):
    assert lb_tau(rs_newton) == F(1, 8)
    ctx = seed_thetas(constant_newton)
    assert ctx.theta == {1: F(1)}
    assert lb_tau(constant_newton, ctx) == F(1, 2)
    assert seed_thetas(intro_newton).theta[2] == F(1, 4)
    assert lb_tau(intro_newton) <= F(1, 8)


def test_shifted_slope_operator():
    N = build_polygon(parse_operator("z*M - 1 + z", 2))
    assert N.slopes == (F(1),)
    assert seed_thetas(N).theta == {1: F(1)}
    assert lb_tau(N) == F(1, 2)


def test_trace_records_steps(rs_newton):
    ctx = seed_thetas(rs_newton, trace=True)
    assert lb_eps(rs_newton, 0, ctx) == F(1, 2)
    assert ctx.trace_log[-1] == ("param", 0, F(0), F(1, 2))
    assert any(kind == "interval" for kind, *_ in ctx.trace_log)


def test_untraced_context_keeps_no_log(rs_context):
    assert rs_context.trace_log == []


def test_preconditions(rs_newton, rs_context):
    with pytest.raises(DomainError):
        lb_eps(rs_newton, F(1, 7))
    with pytest.raises(DomainError):
        lb_eps_param(rs_context, 3, F(-1))
    with pytest.raises(DomainError):
        lb_eps_param(rs_context, 1, F(1))
    with pytest.raises(DomainError):
        lb_eps_interval(rs_context, 2, F(-1))
    with pytest.raises(DomainError):
        lb_eps_interval(EpsilonContext(newton=rs_newton), 1, F(-1, 4))
    with pytest.raises(DomainError):
        rs_context.set_theta(1, F(1))
    with pytest.raises(DomainError):
        EpsilonContext(newton=rs_newton).set_theta(1, F(0))


@pytest.mark.parametrize("expression", [RUDIN_SHAPIRO, INTRO_EXAMPLE, "z*M - 1 + z"])
def test_bounds_below_brute_force(expression):
    N = build_polygon(parse_operator(expression, 2))
    ctx = seed_thetas(N)
    tau = lb_tau(N, ctx)
    sample = sorted({N.lowest + F(j, 32) for j in range(0, 97, 2)} | {N.lowest + F(1, 32), N.lowest + F(3, 32)})
    assert len(sample) >= 50
    assert all(in_Zdl(v, N.d, N.ell) for v in sample)

    depth = max(iota_bound(N, v, tau) for v in sample) + 5
    run = compute_v(N, depth, cap=N.lowest + 4)
    compared = 0
    for v in sample:
        bound = lb_eps(N, v, ctx)
        assert bound > 0
        above = run.final.above(v)
        if above is not None:
            assert bound <= above - v
            compared += 1
    assert compared >= 25
