"""
End-to-end solving: Newton polygon, tau bound, the set R, the linear system
and its kernel. Also the greedy coefficient extension used to cross-check
kernel vectors, and the existence test for order-one equations.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional

from src.arith.sorted_set import SortedRationalSet
from src.config import get_settings
from src.errors import DomainError, ExtensionError
from src.newton.maps import pi, psi
from src.newton.polygon import NewtonData, build_polygon
from src.series.hahn import FiniteHahn, apply_operator, restrict, val
from src.series.operator import MahlerOperator
from src.solver.linear import LinearSystem, assemble_system, kernel_basis, rank
from src.supports.rset import RsetRun, compute_r

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionElement:
    full: FiniteHahn          # supported on R
    restricted: FiniteHahn    # supported on E


@dataclass(frozen=True)
class SolutionBasis:
    elements: List[SolutionElement]
    E: SortedRationalSet
    rset: RsetRun
    system: LinearSystem
    restricted_rank: int
    newton: NewtonData = field(repr=False, default=None)

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def R(self) -> SortedRationalSet:
        return self.rset.final

    @property
    def psi_R(self) -> SortedRationalSet:
        return self.system.rows


def solve_on(L: MahlerOperator, E: Iterable, budget: Optional[int] = None,
             newton: Optional[NewtonData] = None) -> SolutionBasis:
    """
    Truncations to E of a basis of the Hahn-series solutions of L.

    The restricted family spans res_E(Sol); it is a basis whenever
    -S(L) is contained in E.
    """
    E = E if isinstance(E, SortedRationalSet) else SortedRationalSet(E)
    N = newton if newton is not None else build_polygon(L)
    run = compute_r(N, E, budget=budget)
    system = assemble_system(N, L, run.final)
    vectors = kernel_basis(system)

    elements = []
    for vec in vectors:
        full = FiniteHahn(dict(zip(run.final, vec)))
        elements.append(SolutionElement(full=full, restricted=restrict(full, E)))

    restricted_vectors = [[e.restricted.coefficient(x) for x in E] for e in elements]
    restricted_rank = rank(restricted_vectors, one=L.field.one)
    logger.info("solution space of dimension %d, restricted rank %d", len(elements), restricted_rank)
    return SolutionBasis(
        elements=elements,
        E=E,
        rset=run,
        system=system,
        restricted_rank=restricted_rank,
        newton=N,
    )


def verify_series(L: MahlerOperator, f: FiniteHahn, R: Iterable,
                  newton: Optional[NewtonData] = None) -> SortedRationalSet:
    """Exponents in psi(R) where L(f) has a nonzero coefficient."""
    N = newton if newton is not None else build_polygon(L)
    rows = SortedRationalSet(psi(N, r) for r in R)
    residual = apply_operator(L, f)
    return SortedRationalSet.from_sorted([e for e, _ in residual.items() if e in rows])


def greedy_extend(
    L: MahlerOperator,
    f0: FiniteHahn,
    bound,
    support: Optional[Iterable] = None,
    max_steps: Optional[int] = None,
    newton: Optional[NewtonData] = None,
) -> FiniteHahn:
    """
    Extend initial data on -S(L) term by term: with g = -L(f), add
    a z^gamma where gamma = pi(val g), until g = 0 or gamma > bound.

    Supports of solutions may accumulate below a point (e.g. -1/2^k -> 0),
    which the plain recursion never passes. Given ``support`` (a set closed
    under predecessors, such as R), only residual terms at psi(support) are
    cancelled, which terminates.

    Raises:
        ExtensionError: gamma falls in -S(L), the leading coefficient of
            L(z^gamma) vanishes, or ``max_steps`` is exceeded.
    """
    N = newton if newton is not None else build_polygon(L)
    if max_steps is None:
        max_steps = get_settings().greedy_max_steps
    bound = Fraction(bound)
    minus_slopes = N.minus_slopes()
    rows = None
    if support is not None:
        rows = SortedRationalSet(psi(N, r) for r in support)

    f = f0
    for step in range(max_steps):
        g = -apply_operator(L, f)
        if rows is not None:
            g = restrict(g, rows)
        if g.is_zero():
            return f
        lead = val(g).finite()
        gamma = pi(N, lead)
        if gamma > bound:
            return f
        if gamma in minus_slopes:
            raise ExtensionError(
                f"initial data does not extend: residual at psi({gamma}) with {gamma} in -S(L)", gamma)
        divisor = L.image_coefficient(gamma, lead)
        if not divisor:
            raise ExtensionError(f"initial data does not extend: L(z^{gamma}) has no term z^{lead}", gamma)
        f = f + FiniteHahn.monomial(gamma, g.coefficient(lead) / divisor)
        if step and step % 1000 == 0:
            logger.info("greedy extension: %d steps, last exponent %s", step, gamma)
    raise ExtensionError(f"greedy extension exceeded {max_steps} steps")


def order_one_existence(L: MahlerOperator) -> bool:
    """For n = 1: a nonzero Hahn solution exists iff lc(a_0) = -lc(a_1) at the valuations."""
    if L.order != 1:
        raise DomainError(f"order-one test needs n = 1, got n = {L.order}", L.order)
    a0, a1 = L.coeffs
    return a0.lowest_coefficient() == -a1.lowest_coefficient()
