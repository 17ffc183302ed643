"""Halfplane containment hypergraphs over convex bodies in the plane.

Thin wrapper over the C++ core: exact enumeration of realized subsets,
shattering and VC-dimension, verified epsilon-nets and epsilon-approximations,
and the halfspace-segment hitting-set approximation. Families travel as JSON
documents (see the README for the schema); all rationals are exact strings
like "3/5".
"""

from shatter._core import (
    FamilySyntaxError,
    FamilyValidationError,
    GeneralPositionError,
    InfeasibleInstanceError,
    __version__,
    circle_point,
    count_intersecting_pairs,
    enumerate_edges,
    epsilon_approximation,
    epsilon_net,
    gen,
    hitting_set,
    is_shattered,
    max_discrepancy,
    render_svg,
    roundtrip_family,
    vc_dimension,
)

__all__ = [
    "FamilySyntaxError",
    "FamilyValidationError",
    "GeneralPositionError",
    "InfeasibleInstanceError",
    "__version__",
    "circle_point",
    "count_intersecting_pairs",
    "enumerate_edges",
    "epsilon_approximation",
    "epsilon_net",
    "gen",
    "hitting_set",
    "is_shattered",
    "max_discrepancy",
    "render_svg",
    "roundtrip_family",
    "vc_dimension",
]
