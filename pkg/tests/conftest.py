import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.arith.rationals import naive_height_set
from src.cli.expression import parse_operator
from src.newton.polygon import build_polygon
from src.series.operator import MahlerOperator, Polynomial

F = Fraction

RUDIN_SHAPIRO = "z*M^2 + (z-1)*M - 2"
INTRO_EXAMPLE = "z^2*M^2 - (z^2 + z)*M + z"

RUDIN_SHAPIRO_SERIES = {
    F(-1, 2): F(1), F(-1, 4): F(-2), F(-1, 8): F(4), F(0): F(-1, 3),
    F(1, 2): F(1), F(3, 4): F(-2), F(7, 8): F(4), F(1): F(-5, 6),
    F(3, 2): F(1), F(7, 4): F(-2), F(2): F(11, 12), F(5, 2): F(-1),
    F(3): F(-5, 12), F(7, 2): F(1), F(4): F(-23, 24), F(5): F(13, 24),
    F(6): F(-7, 24), F(7): F(-5, 24), F(8): F(-1, 48),
}

RUDIN_SHAPIRO_R0 = [
    F(-1, 2), F(-1, 4), F(-1, 8), F(0), F(1, 2), F(3, 4), F(7, 8), F(1), F(3, 2),
    F(7, 4), F(2), F(5, 2), F(3), F(7, 2), F(4), F(5), F(6), F(7), F(8),
]


@pytest.fixture(scope="session")
def rs_operator():
    return parse_operator(RUDIN_SHAPIRO, 2)


@pytest.fixture(scope="session")
def rs_newton(rs_operator):
    return build_polygon(rs_operator, cross_check=True)


@pytest.fixture(scope="session")
def intro_operator():
    return parse_operator(INTRO_EXAMPLE, 2)


@pytest.fixture(scope="session")
def intro_newton(intro_operator):
    return build_polygon(intro_operator, cross_check=True)


@pytest.fixture(scope="session")
def constant_operator():
    return parse_operator("M - 1", 2)


@pytest.fixture(scope="session")
def constant_newton(constant_operator):
    return build_polygon(constant_operator, cross_check=True)


@pytest.fixture(scope="session")
def height_8():
    return naive_height_set(8)


# ==================== hypothesis strategies ====================

def rationals(bound: int = 6, max_denominator: int = 64):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_denominator)


@st.composite
def polynomials(draw, max_degree: int = 4, nonzero: bool = False):
    degree = draw(st.integers(0, max_degree))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=degree + 1, max_size=degree + 1))
    p = Polynomial({j: F(c) for j, c in enumerate(coeffs)})
    if nonzero and p.is_zero():
        p = Polynomial({degree: F(1)})
    return p


@st.composite
def mahler_operators(draw, max_order: int = 3, ells=(2, 3), max_degree: int = 4, order=None):
    ell = draw(st.sampled_from(ells))
    n = order if order is not None else draw(st.integers(1, max_order))
    coeffs = [draw(polynomials(max_degree, nonzero=(i in (0, n)))) for i in range(n + 1)]
    return MahlerOperator(ell, coeffs)
