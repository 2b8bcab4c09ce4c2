"""Newton polygon and the maps Psi, psi, pi, Delta."""
from .polygon import NewtonData, build_polygon, inhomogeneous_slopes, lower_hull
from .maps import Psi, psi, pi, psi_direct, pi_direct, pi_of_Psi, Delta, d_index

__all__ = [
    'NewtonData', 'build_polygon', 'inhomogeneous_slopes', 'lower_hull',
    'Psi', 'psi', 'pi', 'psi_direct', 'pi_direct', 'pi_of_Psi', 'Delta', 'd_index',
]
