"""Partitions graded by BG-rank: 2-cores, 2-quotients, counts and mod-5 congruences."""

from bgrank.partitions import (
    Partition,
    PartitionParseError,
    Staircase,
    bg_rank,
    bg_rank_naive,
    format_partition,
    is_staircase,
    normalize_partition,
    parse_partition,
    staircase_bg_rank,
)
from bgrank.core_quotient import (
    Decomposition,
    DominoPosition,
    InvalidDominoError,
    compose,
    core_height_for_rank,
    decompose,
    remove_domino,
    removable_dominoes,
    two_core_by_removal,
)
from bgrank.counting import (
    EnumerationBoundError,
    enumerate_partitions,
    pair_count,
    partition_count,
    pj_enumerate,
    pj_formula,
    rank_exists,
    rank_range,
)
from bgrank.series import (
    FactoredProduct,
    SeriesError,
    TruncatedSeries,
    expand_product,
    jacobi_cube,
    series_invert,
    series_mul,
    verify_mod5_factor_identity,
)
from bgrank.congruence import (
    CongruenceReport,
    ResiduePair,
    fifteen_pairs,
    ramanujan_check,
    residue_rhs,
    triangular_residue_analysis,
    verify_fifteen_pairs,
    verify_pp_mod5,
    verify_reduction_identity,
    verify_refined_congruences,
)

__version__ = "0.1.0"

__all__ = [
    "CongruenceReport",
    "Decomposition",
    "DominoPosition",
    "EnumerationBoundError",
    "FactoredProduct",
    "InvalidDominoError",
    "Partition",
    "PartitionParseError",
    "ResiduePair",
    "SeriesError",
    "Staircase",
    "TruncatedSeries",
    "bg_rank",
    "bg_rank_naive",
    "compose",
    "core_height_for_rank",
    "decompose",
    "enumerate_partitions",
    "expand_product",
    "fifteen_pairs",
    "format_partition",
    "is_staircase",
    "jacobi_cube",
    "normalize_partition",
    "pair_count",
    "parse_partition",
    "partition_count",
    "pj_enumerate",
    "pj_formula",
    "ramanujan_check",
    "rank_exists",
    "rank_range",
    "remove_domino",
    "removable_dominoes",
    "residue_rhs",
    "series_invert",
    "series_mul",
    "staircase_bg_rank",
    "triangular_residue_analysis",
    "two_core_by_removal",
    "verify_fifteen_pairs",
    "verify_mod5_factor_identity",
    "verify_pp_mod5",
    "verify_reduction_identity",
    "verify_refined_congruences",
]
