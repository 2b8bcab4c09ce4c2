from fractions import Fraction as F

import pytest

from src.cli.expression import parse_operator
from src.newton.polygon import build_polygon
from src.supports.receptacle import compute_v
from src.supports.rset import c_bound, check_star, compute_r, compute_r_unpruned


@pytest.fixture(scope="module")
def shifted_newton():
    return build_polygon(parse_operator("z*M - 1 + z", 2))


def test_c_bound(rs_newton, height_8):
    assert c_bound(rs_newton, height_8, F(1, 8)) == 206
    assert c_bound(rs_newton, [], F(1, 8)) == 12


def test_c_bound_at_lowest_exponent(constant_newton, shifted_newton):
    assert c_bound(constant_newton, [F(0)], F(1, 2)) == 0
    assert c_bound(shifted_newton, [F(-1)], F(1, 2)) == 4


def test_constant_operator(constant_newton):
    run = compute_r(constant_newton, [0, 1])
    assert run.final == {F(0)}
    assert run.cap == 1
    assert run.dropped_exponents == set()
    assert run.iterations <= run.c_bound


def test_outside_Zdl_dropped(rs_newton):
    run = compute_r(rs_newton, [F(1, 3), F(0)])
    assert run.dropped_exponents == {F(1, 3)}
    assert F(1, 3) not in run.final


def test_empty_exponent_set(rs_newton):
    run = compute_r(rs_newton, [])
    assert run.H == 0 and run.cap == 0
    assert run.c_bound == 12 and run.M == 36
    assert rs_newton.minus_slopes().issubset(run.final)
    universe = compute_v(rs_newton, run.M, cap=run.cap).final
    assert check_star(rs_newton, run.final, universe)
    assert run.final.issubset(universe)


def test_shifted_slope_operator(shifted_newton):
    run = compute_r(shifted_newton, [0, 1, 2])
    assert run.tau_lb == F(1, 2)
    assert run.c_bound == 12
    assert run.final == {F(-1), F(0), F(1), F(2)}
    assert compute_r_unpruned(shifted_newton, [0, 1, 2], run.M) == run.final


def test_levels_increase(rs_newton):
    run = compute_r(rs_newton, [F(1, 2), F(3, 4)])
    for before, after in zip(run.levels, run.levels[1:]):
        assert before.issubset(after)
    assert {F(-1, 8), F(-1, 16)} <= set(run.final)


def test_check_star_trivial(rs_newton, intro_newton):
    for N in (rs_newton, intro_newton):
        S = N.minus_slopes()
        assert check_star(N, S, S)


def test_check_star_requires_slopes(rs_newton):
    assert not check_star(rs_newton, [F(0)], [F(0)])
