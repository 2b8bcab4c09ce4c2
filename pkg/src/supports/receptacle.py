"""
Receptacle sets

    V_0 = -S(L),    V_{i+1} = union of pi(Psi(v)) for v in V_i,

the bound iota(v) and the membership test v in V.

Levels grow incrementally: only the frontier V_i minus V_{i-1} is expanded.
With a cap B only elements <= B are kept, which is exact because
min pi(Psi(v)) = v, so nothing above B ever produces anything below B.
"""

import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, Optional, Tuple

from sortedcontainers import SortedSet

from src.arith.rationals import in_Zdl, height_h, format_rational
from src.arith.sorted_set import SortedRationalSet
from src.config import get_settings
from src.errors import BudgetExceededError, DomainError
from src.newton.maps import Psi, pi
from src.newton.polygon import NewtonData
from src.supports.epsilon import lb_tau

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReceptacleRun:
    sizes: Tuple[int, ...]
    final: SortedRationalSet
    depth: int
    cap: Optional[Fraction] = None
    levels: Optional[Tuple[SortedRationalSet, ...]] = None

    def level(self, i: int) -> SortedRationalSet:
        if self.levels is None:
            raise DomainError("levels were not kept; rerun compute_v with keep_levels=True")
        return self.levels[i]

    def __contains__(self, v) -> bool:
        return v in self.final


def compute_v(
    N: NewtonData,
    M: int,
    cap=None,
    keep_levels: bool = False,
    budget: Optional[int] = None,
) -> ReceptacleRun:
    """
    Build V_0, ..., V_M (intersected with Q_{<=cap} when cap is given).

    Args:
        N: Newton data of the operator.
        M: depth, M >= 0.
        cap: optional upper bound B on kept elements.
        keep_levels: also return every intermediate level.
        budget: maximum number of elements of a level; defaults to settings.

    Raises:
        BudgetExceededError: a level would exceed ``budget`` elements.
    """
    if M < 0:
        raise DomainError(f"depth must be >= 0, got {M}", M)
    if budget is None:
        budget = get_settings().memory_budget
    cap = Fraction(cap) if cap is not None else None

    level = SortedSet(v for v in N.minus_slopes() if cap is None or v <= cap)
    frontier = list(level)
    sizes = [len(level)]
    levels = [SortedRationalSet.from_sorted(list(level))] if keep_levels else None

    for i in range(1, M + 1):
        if not frontier:
            # stationary from here on
            sizes.extend([len(level)] * (M - i + 1))
            if keep_levels:
                levels.extend([levels[-1]] * (M - i + 1))
            logger.debug("receptacle stationary at level %d (size %d)", i - 1, len(level))
            break
        fresh = set()
        for v in frontier:
            for x in Psi(N, v):
                w = pi(N, x)
                if cap is not None and w > cap:
                    continue
                if w not in level:
                    fresh.add(w)
        if len(level) + len(fresh) > budget:
            raise BudgetExceededError(
                f"receptacle level {i} needs {len(level) + len(fresh)} elements, budget is {budget}",
                requested=len(level) + len(fresh),
                budget=budget,
            )
        level.update(fresh)
        frontier = sorted(fresh)
        sizes.append(len(level))
        if keep_levels:
            levels.append(SortedRationalSet.from_sorted(list(level)))
        logger.debug("receptacle level %d: %d elements (+%d)", i, len(level), len(fresh))

    logger.info("receptacle depth %d%s: %d elements", M,
                "" if cap is None else f" capped at {format_rational(cap)}", len(level))
    return ReceptacleRun(
        sizes=tuple(sizes),
        final=SortedRationalSet.from_sorted(list(level)),
        depth=M,
        cap=cap,
        levels=tuple(levels) if keep_levels else None,
    )


def iota_bound(N: NewtonData, v, tau_lb) -> int:
    """floor((n+1)(v + mu_kappa)/tau_lb + h(v))."""
    v, tau_lb = Fraction(v), Fraction(tau_lb)
    if tau_lb <= 0:
        raise DomainError(f"tau lower bound must be positive, got {tau_lb}", tau_lb)
    if not in_Zdl(v, N.d, N.ell):
        raise DomainError(f"{format_rational(v)} is not in Z_(d={N.d}, ell={N.ell})", v)
    if v < N.lowest:
        raise DomainError(f"{format_rational(v)} is below -mu_kappa = {format_rational(N.lowest)}", v)
    return floor((N.n + 1) * (v - N.lowest) / tau_lb + height_h(v, N.d, N.ell))


# ==================== per-operator cache ====================

class ReceptacleCache:
    """tau lower bounds and capped runs, keyed by Newton data."""

    def __init__(self, max_runs: int = 32):
        self.max_runs = max_runs
        self._tau: Dict[NewtonData, Fraction] = {}
        self._runs: "OrderedDict[tuple, ReceptacleRun]" = OrderedDict()
        self.lock = threading.Lock()

    def tau_for(self, N: NewtonData) -> Fraction:
        with self.lock:
            if N in self._tau:
                return self._tau[N]
        value = lb_tau(N)
        with self.lock:
            self._tau.setdefault(N, value)
            return self._tau[N]

    def run_for(self, N: NewtonData, depth: int, cap=None, budget: Optional[int] = None) -> ReceptacleRun:
        key = (N, depth, None if cap is None else Fraction(cap))
        with self.lock:
            if key in self._runs:
                self._runs.move_to_end(key)
                return self._runs[key]
        run = compute_v(N, depth, cap=cap, budget=budget)
        with self.lock:
            self._runs[key] = run
            while len(self._runs) > self.max_runs:
                self._runs.popitem(last=False)
        return run

    def clear(self) -> None:
        with self.lock:
            self._tau.clear()
            self._runs.clear()


receptacle_cache = ReceptacleCache()


def v_membership_report(N: NewtonData, v, budget: Optional[int] = None) -> Tuple[bool, Optional[int]]:
    """(v in V, iota bound used); the bound is None when v is rejected outright."""
    v = Fraction(v)
    if not in_Zdl(v, N.d, N.ell) or v < N.lowest:
        return False, None
    iota = iota_bound(N, v, receptacle_cache.tau_for(N))
    run = receptacle_cache.run_for(N, iota, cap=v, budget=budget)
    return v in run.final, iota


def v_membership(N: NewtonData, v, budget: Optional[int] = None) -> bool:
    """Decide v in V."""
    return v_membership_report(N, v, budget=budget)[0]


def brute_force_epsilon(N: NewtonData, v, depth: int, cap=None):
    """
    min (V_depth)_{>v} - v from a receptacle run; None if no element of the
    run lies above v. A cap keeps the run small and is exact below it.
    """
    v = Fraction(v)
    run = compute_v(N, depth, cap=cap)
    above = run.final.above(v)
    return None if above is None else above - v
