from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from src.arith.rationals import in_Zdl
from src.cli.expression import parse_operator
from src.newton.maps import pi_of_Psi
from src.errors import BudgetExceededError, DomainError
from src.newton.polygon import build_polygon
from src.supports.receptacle import (
    ReceptacleCache,
    brute_force_epsilon,
    compute_v,
    iota_bound,
    receptacle_cache,
    v_membership,
    v_membership_report,
)
from tests.conftest import INTRO_EXAMPLE, RUDIN_SHAPIRO, mahler_operators, rationals

small_operators = mahler_operators(max_order=2, max_degree=2)


def test_rudin_shapiro_levels(rs_newton):
    run = compute_v(rs_newton, 2, keep_levels=True)
    assert run.level(0) == {F(-1, 2), F(0)}
    assert run.level(1) == {F(-1, 2), F(-1, 4), F(0), F(1)}
    assert run.level(2) == {F(-1, 2), F(-1, 4), F(-1, 8), F(0), F(1, 2), F(1), F(2), F(3), F(5)}
    assert run.sizes == (2, 4, 9)
    assert 5 in run


def test_depth_zero_is_minus_slopes(intro_newton):
    assert compute_v(intro_newton, 0).final == intro_newton.minus_slopes()


def test_levels_not_kept(rs_newton):
    with pytest.raises(DomainError):
        compute_v(rs_newton, 1).level(0)


def test_constant_operator_is_stationary(constant_newton):
    run = compute_v(constant_newton, 50, keep_levels=True)
    assert run.final == {F(0)}
    assert run.sizes == (1,) * 51


def test_budget(rs_newton):
    with pytest.raises(BudgetExceededError) as info:
        compute_v(rs_newton, 10, budget=5)
    assert info.value.budget == 5
    assert info.value.requested == 9


def test_negative_depth(rs_newton):
    with pytest.raises(DomainError):
        compute_v(rs_newton, -1)


@pytest.mark.parametrize("v,expected", [(F(0), 12), (F(-1, 2), 0), (F(1), 36)])
def test_iota_bound(rs_newton, v, expected):
    assert iota_bound(rs_newton, v, F(1, 8)) == expected


@pytest.mark.parametrize("v", [F(1, 7), F(-3, 4)])
def test_iota_bound_rejects(rs_newton, v):
    with pytest.raises(DomainError):
        iota_bound(rs_newton, v, F(1, 8))


def test_membership(rs_newton):
    assert v_membership_report(rs_newton, 1) == (True, 36)
    assert v_membership(rs_newton, F(1, 7)) is False
    assert v_membership_report(rs_newton, F(-3, 4)) == (False, None)
    assert v_membership(rs_newton, F(-1, 8)) is True


def test_brute_force_epsilon(rs_newton):
    assert brute_force_epsilon(rs_newton, F(-3, 4), 2) == F(1, 4)
    assert brute_force_epsilon(rs_newton, F(-1, 4), 2) == F(1, 8)
    assert brute_force_epsilon(rs_newton, F(5), 2) is None


def test_cache_reuses_runs(rs_newton):
    cache = ReceptacleCache(max_runs=1)
    first = cache.run_for(rs_newton, 3, cap=1)
    assert cache.run_for(rs_newton, 3, cap=1) is first
    cache.run_for(rs_newton, 2)
    assert cache.run_for(rs_newton, 3, cap=1) is not first
    assert cache.tau_for(rs_newton) == F(1, 8)
    cache.clear()


@settings(max_examples=40, deadline=None)
@given(small_operators, rationals(2, 8))
def test_cap_is_exact(L, bound):
    N = build_polygon(L)
    capped = compute_v(N, 3, cap=bound)
    assert capped.final == compute_v(N, 3).final.up_to(bound)


@settings(max_examples=40, deadline=None)
@given(small_operators, st.integers(0, 3))
def test_level_invariants(L, depth):
    N = build_polygon(L)
    run = compute_v(N, depth, keep_levels=True)
    P = len(N.points)
    for i in range(depth + 1):
        level = run.level(i)
        assert level.min() == N.lowest
        assert len(level) <= P ** i * N.kappa
        assert all(in_Zdl(v, N.d, N.ell) for v in level)
        if i:
            assert run.level(i - 1).issubset(level)


@settings(max_examples=40, deadline=None)
@given(small_operators, st.integers(1, 3))
def test_every_element_has_a_predecessor(L, depth):
    N = build_polygon(L)
    run = compute_v(N, depth, keep_levels=True)
    for i in range(1, depth + 1):
        previous = run.level(i - 1)
        reachable = set()
        for w in previous:
            reachable.update(pi_of_Psi(N, w))
        assert all(v in reachable for v in run.level(i))


@pytest.mark.parametrize("expression", [RUDIN_SHAPIRO, INTRO_EXAMPLE, "z*M - 1 + z"])
def test_membership_matches_deep_run(expression):
    N = build_polygon(parse_operator(expression, 2))
    tau = receptacle_cache.tau_for(N)
    sample = sorted({N.lowest + F(j, 16) for j in range(0, 49)})
    assert all(in_Zdl(v, N.d, N.ell) for v in sample)

    cap = N.lowest + 3
    run = compute_v(N, max(iota_bound(N, v, tau) for v in sample) + 3, cap=cap)
    inside = 0
    for v in sample:
        member = v_membership(N, v)
        assert member == (v in run)
        inside += member
    for v in sample[::8]:
        gap = brute_force_epsilon(N, v, run.depth, cap=cap)
        if gap is not None:
            assert v_membership(N, v + gap)
    assert 0 < inside < len(sample)
