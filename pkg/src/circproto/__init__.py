"""Minimal 1-NN prototype configurations for concentric circular classes."""

from circproto.geometry import (
    Point2D,
    RingLayout,
    arc_midpoint_positions,
    intra_ring_gap,
    min_cross_distance,
    prototype_positions,
)
from circproto.separation import (
    SeparationVerdict,
    find_feasible_rotation,
    separable_euclidean,
    separable_reduced,
)
from circproto.bounds import (
    BoundsRow,
    bounds_row,
    equal_count_exact,
    first_order_count,
    lower_bound_count,
    lower_bound_for_circle,
    second_order_count,
    theory_sequence,
    upper_bound_count,
)
from circproto.findpugs import PrototypeSolution, SearchExhaustedError, d1, d2, find_pugs
from circproto.oracle import ClassificationReport, RasterGrid, rasterize_regions, verify_separation

__all__ = [
    "BoundsRow",
    "ClassificationReport",
    "Point2D",
    "PrototypeSolution",
    "RasterGrid",
    "RingLayout",
    "SearchExhaustedError",
    "SeparationVerdict",
    "arc_midpoint_positions",
    "bounds_row",
    "d1",
    "d2",
    "equal_count_exact",
    "find_feasible_rotation",
    "find_pugs",
    "first_order_count",
    "intra_ring_gap",
    "lower_bound_count",
    "lower_bound_for_circle",
    "min_cross_distance",
    "prototype_positions",
    "rasterize_regions",
    "second_order_count",
    "separable_euclidean",
    "separable_reduced",
    "theory_sequence",
    "upper_bound_count",
    "verify_separation",
]
