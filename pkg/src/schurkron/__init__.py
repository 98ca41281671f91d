"""Exact Kronecker products of Schur functions with two-row rectangles.

Closed-form expansions (shifted parity classes for two-row shapes, a
boundary-term recursion for hooks), an independent character-theoretic
oracle, and the generating-function and tableau-counting consequences.
"""

from .closed_forms import (
    RugSpec,
    check_recurrence,
    check_stability,
    coeff_hook_rosas,
    coeff_two_row,
    easy_case,
    product_hook,
    product_two_row,
    two_row_rug,
    verify_magic,
)
from .partitions import (
    Partition,
    ShapeClass,
    ShiftVector,
    classify_shape,
    conjugate,
    contained_in_double_hook,
    degree,
    format_partition,
    in_P,
    in_P_bar,
    in_gamma_P,
    make_partition,
    parse_partition,
    partitions_of,
    phi,
)
from .schur import (
    CharacterCache,
    SchurVector,
    character,
    default_cache,
    kron_coeff_oracle,
    kron_oracle,
    load_cache,
    perp_box,
    pieri_mult_col,
    pieri_mult_row,
    save_cache,
    scalar_product,
    syt_count,
    z_value,
)
from .series import (
    RationalGF,
    bounded_sum_identity_check,
    catalan,
    coefficient_sum,
    count_by_coefficient,
    g_k,
    l_kr,
    y_height,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterCache",
    "Partition",
    "RationalGF",
    "RugSpec",
    "SchurVector",
    "ShapeClass",
    "ShiftVector",
    "bounded_sum_identity_check",
    "catalan",
    "character",
    "check_recurrence",
    "check_stability",
    "classify_shape",
    "coeff_hook_rosas",
    "coeff_two_row",
    "coefficient_sum",
    "conjugate",
    "contained_in_double_hook",
    "count_by_coefficient",
    "default_cache",
    "degree",
    "easy_case",
    "format_partition",
    "g_k",
    "in_P",
    "in_P_bar",
    "in_gamma_P",
    "kron_coeff_oracle",
    "kron_oracle",
    "l_kr",
    "load_cache",
    "make_partition",
    "parse_partition",
    "partitions_of",
    "perp_box",
    "phi",
    "pieri_mult_col",
    "pieri_mult_row",
    "product_hook",
    "product_two_row",
    "save_cache",
    "scalar_product",
    "syt_count",
    "two_row_rug",
    "verify_magic",
    "y_height",
    "z_value",
]
