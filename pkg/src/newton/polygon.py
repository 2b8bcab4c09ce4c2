"""
Newton polygon of a Mahler operator: lower convex hull of the points
(ell^i, val a_i), its vertices, slopes and the common slope denominator d.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from src.arith.rationals import ExtRational, POS_INF, NEG_INF
from src.arith.sorted_set import SortedRationalSet
from src.config import get_settings
from src.series.operator import MahlerOperator, SupportPoint

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> List[Point]:
    """Monotone-chain lower hull; collinear interior points are dropped."""
    pts = sorted(set(points))
    hull: List[Point] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        # equal abscissas: keep only the lowest ordinate
        if hull and hull[-1][0] == p[0]:
            continue
        hull.append(p)
    return hull


def hull_slopes(hull: Sequence[Point]) -> List[Fraction]:
    return [Fraction(b[1] - a[1]) / (b[0] - a[0]) for a, b in zip(hull, hull[1:])]


@dataclass(frozen=True)
class NewtonData:
    ell: int
    n: int
    points: Tuple[SupportPoint, ...]
    vertices: Tuple[Tuple[int, int], ...]
    slopes: Tuple[Fraction, ...]
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    d: int
    cross_check: bool = False
    breakpoints: Tuple[Fraction, ...] = field(default=(), compare=False)
    pairs: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def kappa(self) -> int:
        return len(self.slopes)

    def mu(self, k: int) -> ExtRational:
        """mu_k with mu_0 = -inf and mu_{kappa+1} = +inf."""
        if k <= 0:
            return NEG_INF
        if k > self.kappa:
            return POS_INF
        return ExtRational(self.slopes[k - 1])

    def minus_mu(self, k: int) -> Fraction:
        """-mu_k for 1 <= k <= kappa."""
        return -self.slopes[k - 1]

    def minus_slopes(self) -> SortedRationalSet:
        """-S(L)."""
        return SortedRationalSet(-m for m in self.slopes)

    @property
    def lowest(self) -> Fraction:
        """-mu_kappa, the least element of the receptacle."""
        return -self.slopes[-1]

    def locate(self, v) -> int:
        """The k in 1..kappa+1 with -mu_k <= v <= -mu_{k-1} (least k at a breakpoint)."""
        return 1 + sum(1 for m in self.slopes if v < -m)

    def locate_image(self, q) -> int:
        """Same as ``locate(pi(q))``, read from the breakpoints psi(-mu_k)."""
        return 1 + sum(1 for b in self.breakpoints if q < b)


def build_polygon(L: MahlerOperator, cross_check: Optional[bool] = None) -> NewtonData:
    """Lower hull of {(ell^i, val a_i)} with vertices, slopes and d."""
    if cross_check is None:
        cross_check = get_settings().cross_check_maps
    raw = [(Fraction(L.ell ** i), Fraction(a.val)) for i, a in enumerate(L.coeffs) if not a.is_zero()]
    hull = lower_hull(raw)
    slopes = tuple(hull_slopes(hull))
    index_of = {L.ell ** i: i for i in range(L.order + 1)}
    alpha = tuple(index_of[int(x)] for x, _ in hull)
    beta = tuple(int(y) for _, y in hull)
    d = lcm(*(s.denominator for s in slopes)) if slopes else 1
    breakpoints = tuple(
        L.ell ** alpha[k - 1] * (-slopes[k - 1]) + beta[k - 1] for k in range(1, len(slopes) + 1)
    )
    points = tuple(L.support_points())
    data = NewtonData(
        ell=L.ell,
        n=L.order,
        points=points,
        vertices=tuple((int(x), int(y)) for x, y in hull),
        slopes=slopes,
        alpha=alpha,
        beta=beta,
        d=d,
        cross_check=cross_check,
        breakpoints=breakpoints,
        pairs=tuple((p.abscissa, p.ordinate) for p in points),
    )
    logger.info("Newton polygon: vertices=%s slopes=%s d=%d",
                data.vertices, [str(s) for s in slopes], d)
    return data


def inhomogeneous_slopes(L: MahlerOperator, q) -> SortedRationalSet:
    """Slopes of the lower hull of {(0, q)} together with the points (ell^i, val a_i)."""
    raw = [(Fraction(0), Fraction(q))]
    raw += [(Fraction(L.ell ** i), Fraction(a.val)) for i, a in enumerate(L.coeffs) if not a.is_zero()]
    return SortedRationalSet(hull_slopes(lower_hull(raw)))
