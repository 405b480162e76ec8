"""Exact computations with monomial ideals: localization, decomposition,
regularity, linear resolutions and polymatroidal checks."""
from .core import (
    DimensionError,
    DomainError,
    Monomial,
    MonomialIdeal,
    MonomialIdealError,
    MonomialPrime,
    ResourceCapError,
    colon_monomial,
    contains,
    descriptors,
    intersect,
    localize,
    localize_via_saturation,
    make_ideal,
    power,
    product,
    saturate_graded,
    saturate_var,
)
from .io import parse_ideal
from .polymatroid import is_matroidal, is_polymatroidal, is_veronese_type, veronese_type
from .resolution import betti, has_linear_resolution, linear_quotients, regularity

__version__ = "0.1.0"
