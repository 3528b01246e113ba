"""Covering-based rough sets with incrementally maintained characteristic matrices."""

from .boolmat import (
    BoolMatrix,
    BoolVector,
    ShapeError,
    bool_dot,
    bool_matvec,
    circle_dot,
    circle_matvec,
    count_work,
    replace_col,
    replace_row,
    transpose,
)
from .charmat import CharMatrices, StaleMatricesError, build_gamma, build_pi, fifth_approx, second_approx, sixth_approx
from .covering import (
    Approx,
    Covering,
    CoveringSpace,
    InvalidCoveringError,
    Universe,
    char_vector,
    matrix_rep,
    neighborhood,
    oracle_approx,
    validate,
)
from .dynamic import InvalidUpdateError, UpdateEvent, apply_update, recompute_baseline, update_gamma, update_pi
from .reduct import DecisionSystem, Reduct, find_reduct, preserves, reduct_after_update

__version__ = "0.1.0"
