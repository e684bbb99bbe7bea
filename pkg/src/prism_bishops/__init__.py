"""Bishop independence on the surface of an n x n x m square prism."""

from .board import BoardSpec, DiagStep, Square, make_board, neighbors, diagonal_step
from .constructions import construct_placement
from .diagonals import cycle_sets, enumerate_diagonals, face_visit_profile, p_coverage_check
from .formulas import diagonal_count_formula, lemma3_bound, theorem_value
from .solver import Placement, brute_force_oracle, independence_number, is_independent, max_placement

__all__ = [
    "BoardSpec", "DiagStep", "Square", "make_board", "neighbors", "diagonal_step",
    "construct_placement",
    "cycle_sets", "enumerate_diagonals", "face_visit_profile", "p_coverage_check",
    "diagonal_count_formula", "lemma3_bound", "theorem_value",
    "Placement", "brute_force_oracle", "independence_number", "is_independent", "max_placement",
]
