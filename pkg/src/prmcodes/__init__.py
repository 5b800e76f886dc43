"""Projective Reed-Muller codes over GF(q): closed-form parameters,
brute-force oracles, and the separating-hyperplane machinery behind the
minimum-distance argument.
"""

from .gf import FieldSpec, field_from_order, make_field
from .homopoly import HomPoly, nonvanishing_set, random_poly, zero_set
from .prm import (
    CodeParams,
    GenMatrix,
    dimension_formula,
    distance_formula,
    generator_matrix,
    min_weight_exhaustive,
    monomials,
    rank_gf,
    verify_no_single_nonvanishing,
)
from .projgeom import (
    Flat,
    canonicalize,
    contains,
    enumerate_points,
    extensions,
    flat_points,
    hyperplane_form,
    num_points,
    span,
)
from .separation import (
    FlatChain,
    SeparationInstance,
    contradiction_report,
    gap_product,
    separating_family,
    separating_hyperplane,
)

__all__ = [
    "FieldSpec", "make_field", "field_from_order",
    "HomPoly", "zero_set", "nonvanishing_set", "random_poly",
    "CodeParams", "GenMatrix", "monomials", "generator_matrix", "rank_gf",
    "dimension_formula", "distance_formula", "min_weight_exhaustive",
    "verify_no_single_nonvanishing",
    "Flat", "canonicalize", "span", "contains", "flat_points", "extensions",
    "hyperplane_form", "enumerate_points", "num_points",
    "SeparationInstance", "FlatChain", "separating_hyperplane",
    "separating_family", "gap_product", "contradiction_report",
]
