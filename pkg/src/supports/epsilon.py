"""
Certified positive lower bounds on the gaps of the receptacle,

    eps(v) = min V_{>v} - v,        tau = min(eps(-mu_1), ..., eps(-mu_kappa), 1/(d ell^n)).

``lb_eps_param`` and ``lb_eps_interval`` walk the predecessor tree through
Delta; the tree is never materialised, results are memoised per
(kappa0, w) together with the height of the subtree that produced them.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.arith.rationals import ExtRational, POS_INF, in_Zdl, height_h, format_rational
from src.config import get_settings
from src.errors import DomainError
from src.newton.maps import Delta, d_index, pi_of_Psi
from src.newton.polygon import NewtonData

logger = logging.getLogger(__name__)


@dataclass
class EpsilonContext:
    newton: NewtonData
    theta: Dict[int, Fraction] = field(default_factory=dict)
    memo: Dict[Tuple[str, int, Fraction], Tuple[Fraction, int]] = field(default_factory=dict)
    trace: bool = False
    trace_log: List[Tuple[str, int, Fraction, Fraction]] = field(default_factory=list)

    def set_theta(self, k: int, value: Fraction) -> None:
        if k in self.theta:
            raise DomainError(f"theta_{k} is already set", k)
        if value <= 0:
            raise DomainError(f"theta_{k} must be positive, got {value}", value)
        self.theta[k] = value

    def _record(self, kind: str, kappa0: int, w: Fraction, value: Fraction) -> None:
        if self.trace:
            logger.debug("%s(kappa0=%d, w=%s) -> %s", kind, kappa0,
                         format_rational(w), format_rational(value))
            self.trace_log.append((kind, kappa0, w, value))


def _min_finite(candidates) -> Fraction:
    best = POS_INF
    for c in candidates:
        c = ExtRational.coerce(c)
        if c < best:
            best = c
    if not best.is_finite:
        raise DomainError("no finite lower bound candidate")
    return best.finite()


def _scale(m: Fraction, ell: int, exponent: int) -> Fraction:
    return m * Fraction(ell) ** exponent


def _tau_floor(N: NewtonData) -> Fraction:
    return Fraction(1, N.d * N.ell ** N.n)


def _first_level(N: NewtonData):
    """V_1 = union of pi(Psi(v)) over v in -S(L)."""
    out = set()
    for v in N.minus_slopes():
        out.update(pi_of_Psi(N, v))
    return out


def _height_limit(ctx: EpsilonContext, k: int, v: Fraction) -> Fraction:
    N = ctx.newton
    gap = min(ctx.theta[k], _tau_floor(N))
    return (N.n + 1) * (v + N.slopes[k - 1]) / gap + height_h(v, N.d, N.ell) + 1


# ==================== Algorithm "param" ====================

def _param(ctx: EpsilonContext, kappa0: int, v: Fraction) -> Fraction:
    key = ("param", kappa0, v)
    if key in ctx.memo:
        return ctx.memo[key][0]

    N = ctx.newton
    kappa = N.kappa
    lowest = N.lowest

    if v < lowest:
        result = lowest - v
    elif v == lowest:
        above = sorted(w for w in _first_level(N) if w != lowest)
        result = above[0] - lowest if above else Fraction(1)
    else:
        result = None
        for k in range(kappa0 + 1, kappa + 1):
            lower = N.minus_mu(k)
            upper = -N.mu(k - 1)
            if lower < v and upper > v:
                value, height = _interval(ctx, k - 1, v)
                limit = _height_limit(ctx, k, v)
                assert height <= limit, f"epsilon tree height {height} exceeds {limit} at {v}"
                result = value
                break
            if k >= 2 and v == N.minus_mu(k - 1):
                result = _breakpoint(ctx, k - 1)
                break
        if result is None:
            raise DomainError(
                f"cannot locate {format_rational(v)} for kappa0={kappa0}", v)

    ctx.memo[key] = (result, 0)
    ctx._record("param", kappa0, v, result)
    return result


def _breakpoint(ctx: EpsilonContext, j: int) -> Fraction:
    """Lower bound on eps(-mu_j) for 1 <= j < kappa."""
    N = ctx.newton
    w0 = N.minus_mu(j)
    candidates = []
    for wprime in Delta(N, w0):
        m = _param(ctx, j, wprime)
        candidates.append(_scale(m, N.ell, d_index(N, w0, wprime) - N.alpha[j - 1]))
    candidates.append(N.mu(j) - N.mu(j - 1))
    image = [w for w in pi_of_Psi(N, w0) if w != w0]
    if image:
        candidates.append(image[0] - w0)
    return _min_finite(candidates)


# ==================== Algorithm "interval" ====================

def _interval(ctx: EpsilonContext, kappa0: int, w: Fraction) -> Tuple[Fraction, int]:
    key = ("interval", kappa0, w)
    if key in ctx.memo:
        return ctx.memo[key]

    N = ctx.newton
    if not -N.mu(kappa0) > w:
        raise DomainError(f"{format_rational(w)} is not below -mu_{kappa0}", w)
    k = kappa0 + 1
    if k not in ctx.theta:
        raise DomainError(f"theta_{k} is required before bounding eps({format_rational(w)})", w)

    ceiling = N.minus_mu(k) + ctx.theta[k]
    if w < ceiling:
        if w < N.minus_mu(k):
            value = _param(ctx, k, w)
        else:
            value = ceiling - w
        height = 0
    else:
        candidates = []
        height = 0
        for wprime in Delta(N, w):
            m, sub_height = _interval(ctx, kappa0, wprime)
            height = max(height, sub_height + 1)
            candidates.append(_scale(m, N.ell, d_index(N, w, wprime) - N.alpha[kappa0]))
        candidates.append(-N.mu(kappa0) - w)
        image = [x for x in pi_of_Psi(N, w) if x != w]
        if image:
            candidates.append(image[0] - w)
        value = _min_finite(candidates)

    assert value > 0, f"non-positive epsilon bound {value} at {w}"
    ctx.memo[key] = (value, height)
    ctx._record("interval", kappa0, w, value)
    return value, height


# ==================== public API ====================

def lb_eps_param(ctx: EpsilonContext, kappa0: int, v) -> Fraction:
    """
    Positive lower bound on eps(v).

    Args:
        ctx: context holding theta_{kappa0+1}, ..., theta_kappa.
        kappa0: 0..kappa; v must be <= -mu_{kappa0}.
        v: exponent in Z_{d,l}.
    """
    v = Fraction(v)
    N = ctx.newton
    if kappa0 < 0 or kappa0 > N.kappa:
        raise DomainError(f"kappa0 must lie in 0..{N.kappa}, got {kappa0}", kappa0)
    if kappa0 > 0 and v > N.minus_mu(kappa0):
        raise DomainError(f"{format_rational(v)} exceeds -mu_{kappa0}", v)
    return _param(ctx, kappa0, v)


def lb_eps_interval(ctx: EpsilonContext, kappa0: int, w) -> Tuple[Fraction, Fraction]:
    """Positive lower bound on eps(w) for w < -mu_{kappa0}; returns (w, bound)."""
    w = Fraction(w)
    if kappa0 < 0 or kappa0 >= ctx.newton.kappa:
        raise DomainError(f"kappa0 must lie in 0..{ctx.newton.kappa - 1}, got {kappa0}", kappa0)
    value, _ = _interval(ctx, kappa0, w)
    return w, value


def seed_thetas(N: NewtonData, trace: Optional[bool] = None) -> EpsilonContext:
    """Context with theta_kappa, ..., theta_1 set, in that order."""
    if trace is None:
        trace = get_settings().epsilon_trace
    ctx = EpsilonContext(newton=N, trace=trace)
    for k in range(N.kappa, 0, -1):
        ctx.set_theta(k, _param(ctx, k, N.minus_mu(k)))
        logger.info("theta_%d = %s", k, format_rational(ctx.theta[k]))
    return ctx


def lb_eps(N: NewtonData, v, ctx: Optional[EpsilonContext] = None, trace: Optional[bool] = None) -> Fraction:
    """Positive lower bound on eps(v) for v in Z_{d,l}."""
    v = Fraction(v)
    if not in_Zdl(v, N.d, N.ell):
        raise DomainError(f"{format_rational(v)} is not in Z_(d={N.d}, ell={N.ell})", v)
    if ctx is None:
        ctx = seed_thetas(N, trace=trace)
    return _param(ctx, 0, v)


def lb_tau(N: NewtonData, ctx: Optional[EpsilonContext] = None) -> Fraction:
    """min(theta_1, ..., theta_kappa, 1/(d ell^n))."""
    if ctx is None:
        ctx = seed_thetas(N)
    return min(list(ctx.theta.values()) + [_tau_floor(N)])
