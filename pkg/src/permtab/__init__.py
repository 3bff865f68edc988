"""Permutation tableaux, their routing bijections, and signed enumeration.

The package enumerates 0/1 tableaux on left-justified diagrams and
their shifted type-B analogues, maps them to permutations (symmetric
permutations in type B) by routing paths through the filling, tracks
the restriction statistics on both sides, and machine-checks the
identities tying everything together.  ``permtab.claims`` lists the
checks; the ``permtab`` command line drives enumeration, mapping, and
verification.
"""

from .claims import CLAIMS, Claim, VerifyReport, run_claim
from .imbalance import (
    METHODS,
    ImbalanceRecord,
    bivariate_tableau_poly,
    check_bivariate_identity,
    check_series_identity,
    rhs_series,
    sign_imbalance,
    sign_imbalance_b,
    sign_imbalance_b_records,
    sign_imbalance_records,
    urc_series,
    weighted_rising_series,
)
from .involutions import (
    BlockCensus,
    avoids_blocked_prefix,
    block_census,
    enumerate_block_perms,
    in_swap12_domain,
    in_symmetric_swap_domain,
    in_triple_swap_domain,
    is_block_perm,
    is_narrow_block_perm,
    prefix_involution,
    swap12,
    symmetric_swap12,
    tail_involution,
    triple_swap,
)
from .permstat import (
    FourSets,
    PartialPerm,
    check_perm,
    drop_fixed_points,
    enumerate_symmetric_perms,
    extend_with_fixed_points,
    four_position_sets,
    four_sets,
    is_symmetric_perm,
    mid_point_values,
    nwnm_count,
    nwnm_of_partial,
    nwnm_values_of_partial,
    perm_sign_weight,
    weak_excedance_positions,
)
from .series import BivarPoly, IntPoly, TruncatedSeries, rising_factorial
from .tableaux import (
    Shape,
    Tableau,
    TableauStatistics,
    canonical_json,
    classify_cells,
    column_label_sets,
    count_by_statistics,
    count_fillings,
    count_tableaux,
    empty_tableau,
    enumerate_tableaux,
    fillings,
    is_valid,
    shape_from_column_labels,
    shape_from_row_sizes,
    statistics,
    tableau_from_dict,
    tableau_to_dict,
)
from .typeb import (
    BStatistics,
    BTableau,
    ShiftedShape,
    SymTableau,
    btableau_from_dict,
    btableau_statistics,
    btableau_to_dict,
    column_label_sets_b,
    count_btableaux,
    enumerate_btableaux,
    from_symmetric_perm,
    is_valid_btableau,
    symmetrize,
    to_symmetric_perm,
)
from .zigzag import (
    PathViolation,
    ZigzagPath,
    exit_map,
    from_exit_map,
    from_permutation,
    path_intersection_violations,
    restriction_sets_match,
    row_labels_are_weak_excedances,
    to_permutation,
    trace_path,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "Claim",
    "VerifyReport",
    "run_claim",
    "METHODS",
    "ImbalanceRecord",
    "bivariate_tableau_poly",
    "check_bivariate_identity",
    "check_series_identity",
    "rhs_series",
    "sign_imbalance",
    "sign_imbalance_b",
    "sign_imbalance_b_records",
    "sign_imbalance_records",
    "urc_series",
    "weighted_rising_series",
    "BlockCensus",
    "avoids_blocked_prefix",
    "block_census",
    "enumerate_block_perms",
    "in_swap12_domain",
    "in_symmetric_swap_domain",
    "in_triple_swap_domain",
    "is_block_perm",
    "is_narrow_block_perm",
    "prefix_involution",
    "swap12",
    "symmetric_swap12",
    "tail_involution",
    "triple_swap",
    "FourSets",
    "PartialPerm",
    "check_perm",
    "drop_fixed_points",
    "enumerate_symmetric_perms",
    "extend_with_fixed_points",
    "four_position_sets",
    "four_sets",
    "is_symmetric_perm",
    "mid_point_values",
    "nwnm_count",
    "nwnm_of_partial",
    "nwnm_values_of_partial",
    "perm_sign_weight",
    "weak_excedance_positions",
    "BivarPoly",
    "IntPoly",
    "TruncatedSeries",
    "rising_factorial",
    "Shape",
    "Tableau",
    "TableauStatistics",
    "canonical_json",
    "classify_cells",
    "column_label_sets",
    "count_by_statistics",
    "count_fillings",
    "count_tableaux",
    "empty_tableau",
    "enumerate_tableaux",
    "fillings",
    "is_valid",
    "shape_from_column_labels",
    "shape_from_row_sizes",
    "statistics",
    "tableau_from_dict",
    "tableau_to_dict",
    "BStatistics",
    "BTableau",
    "ShiftedShape",
    "SymTableau",
    "btableau_from_dict",
    "btableau_statistics",
    "btableau_to_dict",
    "column_label_sets_b",
    "count_btableaux",
    "enumerate_btableaux",
    "from_symmetric_perm",
    "is_valid_btableau",
    "symmetrize",
    "to_symmetric_perm",
    "PathViolation",
    "ZigzagPath",
    "exit_map",
    "from_exit_map",
    "from_permutation",
    "path_intersection_violations",
    "restriction_sets_match",
    "row_labels_are_weak_excedances",
    "to_permutation",
    "trace_path",
    "__version__",
]
