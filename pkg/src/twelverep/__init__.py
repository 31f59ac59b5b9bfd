"""Recognition of 12-representable graphs with certificate words and models."""
from .graphs import Graph, GridGraph, LabeledGraph, bipartition, complement, grid_from_points
from .models import (
    IntervalModel,
    TriangleModel,
    icb_to_representant,
    ordering_to_icb_model,
    ordering_to_triangle_model,
    triangle_to_representant,
    validate_icb,
    validate_triangle,
)
from .patterns import ICB_FAMILY, TRIANGLE_FAMILY, find_pattern_free_ordering
from .recognition import (
    Decision,
    grid_12_representable,
    is_12_representable,
    is_12_representable_bipartite,
    tree_12_representable,
)
from .words import has_u_match, reduce, restrict, reverse, u_represents

__all__ = [
    "Decision", "Graph", "GridGraph", "ICB_FAMILY", "IntervalModel", "LabeledGraph",
    "TRIANGLE_FAMILY", "TriangleModel", "bipartition", "complement", "find_pattern_free_ordering",
    "grid_12_representable", "grid_from_points", "has_u_match", "icb_to_representant",
    "is_12_representable", "is_12_representable_bipartite", "ordering_to_icb_model",
    "ordering_to_triangle_model", "reduce", "restrict", "reverse", "tree_12_representable",
    "triangle_to_representant", "u_represents", "validate_icb", "validate_triangle",
]
