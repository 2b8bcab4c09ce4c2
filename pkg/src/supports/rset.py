"""
The finite set R: a superset of (E within V) and -S(L), inside V, such that
truncating solutions to R is an isomorphism onto C_R.

    R_0 = (E u -S(L)) n V^_M
    R_{i+1} = union over (ell^a, b) in P(L) of ell^(-a) (psi(R_i) - b), intersected with V^_M

where V^_M = V_M n Q_{<=N}.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, List, Optional, Tuple

from src.arith.rationals import depth_for_set, format_rational, in_Zdl
from src.arith.sorted_set import SortedRationalSet
from src.newton.maps import pi_of_Psi, psi
from src.newton.polygon import NewtonData
from src.supports.receptacle import compute_v, receptacle_cache

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RsetRun:
    levels: Tuple[SortedRationalSet, ...]
    final: SortedRationalSet
    cap: Fraction            # N of the pruning Q_{<=N}
    H: int
    M: int
    tau_lb: Fraction
    c_bound: int
    receptacle_size: int
    dropped_exponents: SortedRationalSet

    @property
    def iterations(self) -> int:
        return len(self.levels) - 1


def _split_exponents(N: NewtonData, E: Iterable) -> Tuple[SortedRationalSet, SortedRationalSet]:
    E = E if isinstance(E, SortedRationalSet) else SortedRationalSet(E)
    kept = [e for e in E if in_Zdl(e, N.d, N.ell)]
    dropped = [e for e in E if not in_Zdl(e, N.d, N.ell)]
    return SortedRationalSet.from_sorted(kept), SortedRationalSet.from_sorted(dropped)


def _pruning_cap(N: NewtonData, kept: SortedRationalSet) -> Fraction:
    top = kept.union(N.minus_slopes()).max()
    return max(Fraction(0), top)


def c_bound(N: NewtonData, E: Iterable, tau_lb) -> int:
    """floor((n+1)(N + mu_kappa)/tau_lb) + H."""
    kept, _ = _split_exponents(N, E)
    cap = _pruning_cap(N, kept)
    H = depth_for_set(kept, N.d, N.ell)
    return floor((N.n + 1) * (cap - N.lowest) / Fraction(tau_lb)) + H


def _step(N: NewtonData, current: SortedRationalSet, universe: SortedRationalSet) -> SortedRationalSet:
    images = [psi(N, r) for r in current]
    candidates = {(x - b) / a for x in images for a, b in N.pairs}
    return SortedRationalSet(w for w in candidates if w in universe)


def _iterate(N: NewtonData, start: SortedRationalSet, universe: SortedRationalSet,
             limit: Optional[int] = None) -> List[SortedRationalSet]:
    levels = [start]
    while True:
        nxt = _step(N, levels[-1], universe)
        if nxt == levels[-1]:
            return levels
        levels.append(nxt)
        if limit is not None:
            assert len(levels) - 1 <= limit, \
                f"R iteration ran {len(levels) - 1} steps, bound is {limit}"


def compute_r(N: NewtonData, E: Iterable, budget: Optional[int] = None, tau_lb=None) -> RsetRun:
    """
    Compute R for the exponent set E.

    Exponents of E outside Z_{d,l} cannot carry a solution coefficient; they
    are dropped here and reported in ``dropped_exponents``.
    """
    kept, dropped = _split_exponents(N, E)
    if dropped:
        logger.info("dropping %d exponents outside Z_(%d,%d)", len(dropped), N.d, N.ell)
    tau = Fraction(tau_lb) if tau_lb is not None else receptacle_cache.tau_for(N)
    cap = _pruning_cap(N, kept)
    H = depth_for_set(kept, N.d, N.ell)
    bound = c_bound(N, kept, tau)
    M = (N.n + 1) * bound
    logger.info("R parameters: N=%s H=%d tau=%s c=%d M=%d",
                format_rational(cap), H, format_rational(tau), bound, M)

    universe = receptacle_cache.run_for(N, M, cap=cap, budget=budget).final
    start = kept.union(N.minus_slopes()).intersection(universe)
    levels = _iterate(N, start, universe, limit=bound)
    logger.info("R stabilised after %d steps with %d elements", len(levels) - 1, len(levels[-1]))
    return RsetRun(
        levels=tuple(levels),
        final=levels[-1],
        cap=cap,
        H=H,
        M=M,
        tau_lb=tau,
        c_bound=bound,
        receptacle_size=len(universe),
        dropped_exponents=dropped,
    )


def compute_r_unpruned(N: NewtonData, E: Iterable, depth: int) -> SortedRationalSet:
    """The same fixed point inside an uncapped receptacle run of the given depth."""
    kept, _ = _split_exponents(N, E)
    universe = compute_v(N, depth).final
    start = kept.union(N.minus_slopes()).intersection(universe)
    return _iterate(N, start, universe)[-1]


def check_star(N: NewtonData, R: Iterable, universe: Iterable) -> bool:
    """-S(L) in R, and pi(Psi(v)) misses R for every v of the universe outside R."""
    R = R if isinstance(R, SortedRationalSet) else SortedRationalSet(R)
    if not N.minus_slopes().issubset(R):
        return False
    for v in universe:
        if v in R:
            continue
        if any(w in R for w in pi_of_Psi(N, v)):
            return False
    return True
