from fractions import Fraction as F

import random

import pytest
from hypothesis import given, settings, strategies as st

from src.arith.rationals import POS_INF, height_h, in_Zdl
from src.cli.expression import parse_operator
from src.errors import DomainError
from src.newton.maps import Delta, Psi, d_index, pi, pi_direct, pi_of_Psi, psi, psi_direct
from src.newton.polygon import build_polygon
from tests.conftest import mahler_operators, rationals


@pytest.mark.parametrize("v,image", [(F(-1, 2), F(-1)), (F(0), F(0)), (F(1), F(1)), (F(-1), F(-3))])
def test_psi_examples(rs_newton, v, image):
    assert psi(rs_newton, v) == image
    assert pi(rs_newton, image) == v


def test_Psi_examples(rs_newton):
    assert Psi(rs_newton, 0) == {F(0), F(1)}
    assert Psi(rs_newton, F(-1, 2)) == {F(-1), F(-1, 2), F(0)}
    assert pi_of_Psi(rs_newton, 0) == {F(0), F(1)}


def test_infinity_passes_through(rs_newton):
    assert psi(rs_newton, POS_INF) == POS_INF
    assert pi(rs_newton, POS_INF) == POS_INF


def test_Delta_examples(rs_newton):
    assert Delta(rs_newton, 0) == {F(-1, 2), F(-1, 4)}
    assert Delta(rs_newton, F(-1, 2)) == {F(-1)}


def test_d_index_examples(rs_newton):
    assert d_index(rs_newton, 0, F(-1, 2)) == 1
    assert d_index(rs_newton, 0, F(-1, 4)) == 2
    assert d_index(rs_newton, F(-1, 2), -1) == 0


@pytest.mark.parametrize("wprime", [F(0), F(5)])
def test_d_index_outside_Delta(rs_newton, wprime):
    with pytest.raises(DomainError):
        d_index(rs_newton, 0, wprime)


@settings(max_examples=200, deadline=None)
@given(mahler_operators(), st.lists(rationals(), min_size=5, max_size=5))
def test_pi_inverts_psi(L, values):
    N = build_polygon(L, cross_check=True)
    for v in values:
        assert pi(N, psi(N, v)) == v
        assert psi(N, pi(N, v)) == v
        assert min(pi_of_Psi(N, v)) == v



IDENTITY_OPERATORS = [
    ("z*M^2 + (z-1)*M - 2", 2),
    ("z^2*M^2 - (z^2 + z)*M + z", 2),
    ("z^3*M^3 + M^2 - z^4*M + 1 + z", 2),
    ("M^3 - z^2*M + z^4", 3),
    ("(z^4 + 1)*M^2 + z*M - z^3", 3),
    ("z*M - 1 + z", 3),
]


@pytest.mark.parametrize("seed,case", list(enumerate(IDENTITY_OPERATORS)))
def test_inverse_identities_on_thousand_values(seed, case):
    expression, ell = case
    N = build_polygon(parse_operator(expression, ell))
    rng = random.Random(seed)
    values = {F(rng.randint(-4000, 4000), rng.randint(1, 512)) for _ in range(1200)}
    assert len(values) >= 1000
    for v in values:
        assert pi(N, psi(N, v)) == v
        assert psi(N, pi(N, v)) == v

@settings(max_examples=100, deadline=None)
@given(mahler_operators(), rationals(), rationals())
def test_psi_increasing(L, v, w):
    N = build_polygon(L)
    if v < w:
        assert psi(N, v) < psi(N, w)
        assert pi(N, v) < pi(N, w)


@settings(max_examples=100, deadline=None)
@given(mahler_operators(), rationals())
def test_interval_formulas_match_scans(L, v):
    N = build_polygon(L, cross_check=False)
    assert psi(N, v) == psi_direct(N, v)
    assert pi(N, v) == pi_direct(N, v)


@settings(max_examples=100, deadline=None)
@given(mahler_operators(), rationals())
def test_Delta_properties(L, w):
    N = build_polygon(L)
    preds = Delta(N, w)
    assert w not in preds
    for wp in preds:
        assert psi(N, w) in Psi(N, wp)
        assert wp < w
        d_index(N, w, wp)


@pytest.mark.parametrize("v,image", [(F(1, 4), F(1, 4)), (F(-1, 4), F(-1, 2)), (F(-3, 4), F(-2))])
def test_psi_branches(rs_newton, v, image):
    assert psi(rs_newton, v) == image


@pytest.mark.parametrize("q,preimage", [(F(-1, 2), F(-1, 4)), (F(1), F(1)), (F(-2), F(-3, 4))])
def test_pi_branches(rs_newton, q, preimage):
    assert pi(rs_newton, q) == preimage


def test_Delta_of_minus_quarter(rs_newton):
    assert Delta(rs_newton, F(-1, 4)) == {F(-3, 4), F(-1, 2), F(-3, 8)}
    assert d_index(rs_newton, F(-1, 4), F(-1, 2)) == 0
    assert d_index(rs_newton, F(-1, 4), F(-3, 4)) == 1
    assert d_index(rs_newton, F(-1, 4), F(-3, 8)) == 2


def test_Delta_empty_at_single_slope():
    N = build_polygon(parse_operator("M - z", 2))
    assert N.slopes == (F(-1),)
    assert len(Delta(N, 1)) == 0


@settings(max_examples=150, deadline=None)
@given(mahler_operators(), st.data())
def test_height_drops_by_at_most_order(L, data):
    N = build_polygon(L)
    k = data.draw(st.integers(0, 4))
    v = F(data.draw(st.integers(-200, 200)), N.d * N.ell ** k)
    for w in pi_of_Psi(N, v):
        if in_Zdl(w, N.d, N.ell):
            assert height_h(v, N.d, N.ell) <= height_h(w, N.d, N.ell) + L.order
