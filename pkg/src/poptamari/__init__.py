"""Pop operators on finite lattices, with a full toolkit for nu-Tamari lattices."""

from .lattice import FiniteLattice, is_pop_trivial, pop_generic
from .nu_tamari import NuTamari, m_tamari_path, parse_nu, tamari
from .orbits import forward_orbit, theta
from .sortable import enumerate_2_sortable, enumerate_t_sortable_brute, is_t_sortable

__all__ = [
    "FiniteLattice",
    "NuTamari",
    "enumerate_2_sortable",
    "enumerate_t_sortable_brute",
    "forward_orbit",
    "is_pop_trivial",
    "is_t_sortable",
    "m_tamari_path",
    "parse_nu",
    "pop_generic",
    "tamari",
    "theta",
]
