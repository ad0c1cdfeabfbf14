"""Eulerian edge-disjoint paths toolkit (Python bindings)."""

from ._eedp import (
    Instance,
    NotEulerianError,
    ParseError,
    canonical_swirl,
    cross_column_router,
    delete_cycle,
    equivalent,
    find_router,
    find_small_cut,
    flower,
    irrelevant_cycle,
    normalize,
    planted_router,
    random_instance,
    reduce,
    reduce_four_cut,
    reduce_two_cut,
    replay,
    solve,
    two_star_feasible,
    wall_census,
)

__all__ = [
    "Instance",
    "NotEulerianError",
    "ParseError",
    "canonical_swirl",
    "cross_column_router",
    "delete_cycle",
    "equivalent",
    "find_router",
    "find_small_cut",
    "flower",
    "irrelevant_cycle",
    "normalize",
    "planted_router",
    "random_instance",
    "reduce",
    "reduce_four_cut",
    "reduce_two_cut",
    "replay",
    "solve",
    "two_star_feasible",
    "wall_census",
]
