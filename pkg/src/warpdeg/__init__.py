"""Warping degrees, linking warping degrees and related bounds for link diagrams."""

from .diagram import (
    BaseSequence,
    DiagramError,
    LinkDiagram,
    Passage,
    parse,
    reverse_all,
    reverse_component,
    serialize,
    subdiagram,
)
from .matrix import build_matrix, ld_min_matrix
from .normalize import knot_warping_degree, normalize, ou_word
from .splitting import lsplit_bounds, split_bounds, split_bounds_partial
from .verify import linking_number, property_C, verify_all
from .warping import d_a, d_min, d_unoriented, ld_min, sr, warping_points

__version__ = "0.1.0"

__all__ = [
    "BaseSequence", "DiagramError", "LinkDiagram", "Passage", "parse", "serialize",
    "reverse_all", "reverse_component", "subdiagram",
    "build_matrix", "ld_min_matrix",
    "knot_warping_degree", "normalize", "ou_word",
    "lsplit_bounds", "split_bounds", "split_bounds_partial",
    "linking_number", "property_C", "verify_all",
    "d_a", "d_min", "d_unoriented", "ld_min", "sr", "warping_points",
]
