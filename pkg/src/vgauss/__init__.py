"""Gauss-diagram calculus for oriented virtual knots and links."""
from __future__ import annotations

__version__ = "0.1.0"

from .diagram import (
    Chord,
    ChordDiagram,
    EndpointRef,
    GDFError,
    LongTemplate,
    Slot,
    canonicalize,
    close_product,
    parse_gdf,
    parse_long_template,
    serialize_gdf,
    validate,
)
from .equivalence import MoveClass, build_standard_link, decide_equivalent, distance_lower_bound, lower_bounds
from .families import FamilySpec, expected_spectrum, family_diagram, unknotting_script
from .invariants import (
    WritheSpectrum,
    chord_index,
    lambda_vector,
    linking_matrix,
    parity_vector,
    writhe_spectrum,
)
from .moves import Move, MoveKind, MoveSite, apply_move, crossing_change, enumerate_sites, greedy_simplify, parse_moves
from .search import SearchBudget, bounded_distance, verify_script

__all__ = [
    "Chord", "ChordDiagram", "EndpointRef", "GDFError", "LongTemplate", "Slot",
    "canonicalize", "close_product", "parse_gdf", "parse_long_template", "serialize_gdf", "validate",
    "MoveClass", "build_standard_link", "decide_equivalent", "distance_lower_bound", "lower_bounds",
    "FamilySpec", "expected_spectrum", "family_diagram", "unknotting_script",
    "WritheSpectrum", "chord_index", "lambda_vector", "linking_matrix", "parity_vector", "writhe_spectrum",
    "Move", "MoveKind", "MoveSite", "apply_move", "crossing_change", "enumerate_sites", "greedy_simplify",
    "parse_moves", "SearchBudget", "bounded_distance", "verify_script",
]
