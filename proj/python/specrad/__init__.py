"""Structure and log-convexity analysis of nonnegative matrices."""

from ._core import (  # noqa: F401
    DiagonalParams,
    NonnegMatrix,
    SignPattern,
    board_move_irreducible,
    certify,
    classify,
    construct_witness,
    convex_combination,
    convexity_gap,
    cyclic_normal,
    decide_property1,
    fully_indecomposable_by_konig,
    has_total_support,
    holder_gap,
    irreducible_by_powers,
    is_chainable,
    is_fully_indecomposable,
    is_irreducible,
    is_primitive,
    is_scrambling,
    is_two_fold,
    log_radius_scaled,
    midpoint_convexity_check,
    n_cycle,
    parse_matrix,
    partly_decomposable_two_fold,
    pattern_has_cycle,
    period,
    perron_pair,
    product_pattern,
    property1_numeric_probe,
    random_matrix,
    random_pattern,
    remark_2x2,
    scale_exp,
    sign_pattern,
    solve_equality_system,
    spectral_radius,
    theorem_sweep,
    wielandt,
    worked_4x4,
    write_matrix_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
