"""Exact census of spanning-tree isomorphism classes of complete bipartite graphs."""

from .bigraph import (
    BipartiteLabeledTree,
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    degrees,
    to_dot,
)
from .census import (
    BoundsReport,
    census_table,
    exact_classes,
    kirchhoff_count,
    lower_bound,
    oracle_edge_subsets,
    scoins,
    upper_bound,
    upper_bound_lemma25,
    verify_corollaries,
)
from .codec import (
    BipartiteCode,
    code_at,
    code_space_size,
    decode,
    encode,
    enumerate_labeled,
    sample_trees,
    sample_uniform,
)
from .construct import construct_tree, realize_all_pairs
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    DomainError,
    InvalidTree,
    NotMonotone,
    SumMismatch,
)
from .partitions import DegreePartition, count_partitions, enumerate_partitions

__version__ = "0.1.0"

__all__ = [
    "BipartiteCode",
    "BipartiteLabeledTree",
    "BoundsReport",
    "BudgetExceeded",
    "CanonicalForm",
    "DegreePartition",
    "DimensionMismatch",
    "DomainError",
    "InvalidTree",
    "NotMonotone",
    "SumMismatch",
    "are_isomorphic",
    "canonical_form",
    "census_table",
    "code_at",
    "code_space_size",
    "construct_tree",
    "count_partitions",
    "decode",
    "degrees",
    "encode",
    "enumerate_labeled",
    "enumerate_partitions",
    "exact_classes",
    "kirchhoff_count",
    "lower_bound",
    "oracle_edge_subsets",
    "realize_all_pairs",
    "sample_trees",
    "sample_uniform",
    "scoins",
    "to_dot",
    "upper_bound",
    "upper_bound_lemma25",
    "verify_corollaries",
]
