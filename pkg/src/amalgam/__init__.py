"""Amalgamated sums of zero-dimensional schemes over exact fields.

The amalgam of two Artinian algebras over a common quotient is computed
through a joint presentation, a fuzzy-point subquotient and an intersection
ideal, with every step backed by an exact certificate.
"""

from .algebra import (
    AlgebraHom,
    ArtinianAlgebra,
    Subalgebra,
    make_algebra,
    make_hom,
    pullback_oracle,
)
from .groebner import Ideal, buchberger, ideal_intersection, ideal_sum, kernel_of_hom
from .polyring import GF, QQ, PolyRing, Polynomial
from .pushout import (
    AmalgamResult,
    amalgamate,
    build_joint_representation,
    reduce_to_surjective,
    representation_independence_check,
    universal_factorization,
)
from .young import YoungDiagram, young_amalgam_oracle

__version__ = "0.1.0"

__all__ = [
    "AlgebraHom",
    "AmalgamResult",
    "ArtinianAlgebra",
    "GF",
    "Ideal",
    "PolyRing",
    "Polynomial",
    "QQ",
    "Subalgebra",
    "YoungDiagram",
    "amalgamate",
    "buchberger",
    "build_joint_representation",
    "ideal_intersection",
    "ideal_sum",
    "kernel_of_hom",
    "make_algebra",
    "make_hom",
    "pullback_oracle",
    "reduce_to_surjective",
    "representation_independence_check",
    "universal_factorization",
    "young_amalgam_oracle",
]
