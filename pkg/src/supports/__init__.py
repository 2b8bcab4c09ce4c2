"""Supports of solutions: receptacle V, epsilon/tau bounds, the set R."""
from .epsilon import EpsilonContext, lb_eps_param, lb_eps_interval, lb_eps, lb_tau, seed_thetas
from .receptacle import (
    ReceptacleRun, compute_v, iota_bound, v_membership, v_membership_report,
    brute_force_epsilon, receptacle_cache,
)
from .rset import RsetRun, compute_r, compute_r_unpruned, c_bound, check_star

__all__ = [
    'EpsilonContext', 'lb_eps_param', 'lb_eps_interval', 'lb_eps', 'lb_tau', 'seed_thetas',
    'ReceptacleRun', 'compute_v', 'iota_bound', 'v_membership', 'v_membership_report',
    'brute_force_epsilon', 'receptacle_cache',
    'RsetRun', 'compute_r', 'compute_r_unpruned', 'c_bound', 'check_star',
]
