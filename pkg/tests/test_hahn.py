from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from src.arith.rationals import POS_INF
from src.newton.maps import Psi, psi
from src.newton.polygon import build_polygon
from src.series.hahn import FiniteHahn, apply_operator, mahler_substitute, restrict, val
from tests.conftest import mahler_operators, rationals


@st.composite
def finite_series(draw, max_terms: int = 5):
    exponents = draw(st.lists(rationals(4, 16), min_size=0, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(-5, 5).filter(bool), min_size=len(exponents), max_size=len(exponents)))
    return FiniteHahn({e: F(c) for e, c in zip(exponents, coeffs)})


def test_val():
    assert val(FiniteHahn()) == POS_INF
    f = FiniteHahn({F(-1, 2): 1, F(-1, 4): 1, F(-1, 8): 1})
    assert val(f) == F(-1, 2)
    assert val(FiniteHahn({0: -3, 1: 2})) == 0


def test_zero_coefficients_dropped():
    f = FiniteHahn({0: 1}) - FiniteHahn({0: 1})
    assert f.is_zero()
    assert len(FiniteHahn({1: 0, 2: 3})) == 1


def test_restrict():
    f = FiniteHahn({F(-1, 2): 1, F(-1, 4): -2, F(-1, 8): 4, 0: F(-1, 3)})
    assert restrict(f, []).is_zero()
    assert restrict(f, f.support()) == f
    assert restrict(f, [F(-1, 2), F(-1, 4), F(-1, 8)]) == FiniteHahn({F(-1, 2): 1, F(-1, 4): -2, F(-1, 8): 4})


def test_mahler_substitute():
    f = FiniteHahn({F(-1, 2): 1, 1: 1})
    assert mahler_substitute(f, 2, 1) == FiniteHahn({-1: 1, 2: 1})
    assert mahler_substitute(f, 2, 0) == f
    assert mahler_substitute(FiniteHahn({F(1, 4): 1}), 2, 2) == FiniteHahn({1: 1})


def test_apply_operator_examples(rs_operator):
    assert apply_operator(rs_operator, FiniteHahn({1: 1})) == FiniteHahn({5: 1, 3: 1, 2: -1, 1: -2})
    assert apply_operator(rs_operator, FiniteHahn({0: 1})) == FiniteHahn({1: 2, 0: -3})
    assert apply_operator(rs_operator, FiniteHahn({F(-1, 2): 1})) == FiniteHahn({0: 1, F(-1, 2): -2})


@settings(max_examples=60, deadline=None)
@given(mahler_operators(), finite_series())
def test_support_law(L, f):
    N = build_polygon(L)
    image = apply_operator(L, f)
    allowed = set()
    for gamma in f.support():
        allowed.update(Psi(N, gamma))
    assert set(image.support()) <= allowed


@settings(max_examples=500, deadline=None)
@given(mahler_operators(), finite_series(max_terms=4))
def test_valuation_law(L, f):
    N = build_polygon(L)
    image = apply_operator(L, f)
    if f.is_zero():
        assert image.is_zero()
        return
    lowest = val(f).finite()
    assert val(image) >= psi(N, lowest)
    if lowest not in N.minus_slopes():
        assert val(image) == psi(N, lowest)


@settings(max_examples=60, deadline=None)
@given(mahler_operators(), finite_series(), finite_series(), st.integers(-3, 3), st.integers(-3, 3))
def test_linearity(L, f, g, a, b):
    combined = f.scale(F(a)) + g.scale(F(b))
    expected = apply_operator(L, f).scale(F(a)) + apply_operator(L, g).scale(F(b))
    assert apply_operator(L, combined) == expected


@given(finite_series(), st.lists(rationals(4, 16), max_size=6), st.lists(rationals(4, 16), max_size=6))
def test_restrict_composes(f, q1, q2):
    both = set(q1) & set(q2)
    assert restrict(f, both) == restrict(restrict(f, q1), q2)
