"""Geometric and DAHA superpolynomials of plane curve singularities."""

from .exactalg import LaurentQTA, tilde_normalize, specialize
from .semigroup import Semigroup, semigroup_from_generators, family_semigroup

__all__ = [
    "LaurentQTA",
    "tilde_normalize",
    "specialize",
    "Semigroup",
    "semigroup_from_generators",
    "family_semigroup",
]
__version__ = "0.1.0"
