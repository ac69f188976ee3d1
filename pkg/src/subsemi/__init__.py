"""Green's structure of a finitely generated subsemigroup of a regular semigroup.

The semigroup is given by a list of generators, all of one kind
(transformations, partial permutations, bipartitions, or elements of a
Rees 0-matrix semigroup over a group).  Size, membership, factorization
and the R/L/H/D class structure are computed from the orbits of the
lambda and rho values of the generators together with permutation
groups sitting inside the H-classes, so the full element set is never
listed.
"""

from .elements import (
    Transformation,
    PartialPerm,
    Bipartition,
    RZMSContext,
    RZMSElement,
    FormalIdentity,
)
from .engine import Semigroup, enumerate_semigroup

__all__ = [
    "Transformation",
    "PartialPerm",
    "Bipartition",
    "RZMSContext",
    "RZMSElement",
    "FormalIdentity",
    "Semigroup",
    "enumerate_semigroup",
]
