"""Counting how far a binary operation is from being associative.

Parenthesizations of n + 1 factors are binary trees with n internal nodes.
The package partitions them by a four-parameter equivalence on leaf depths
and counts the classes by brute force, generating functions, closed formulas
and bijective oracles.
"""
from ._kernels import BACKEND
from .equivalence import (
    ClassPartition,
    Params,
    WeightedTree,
    check_conjecture,
    class_key,
    count_classes,
    max_class_size,
    partition,
    phi,
)
from .errors import FactorizationError, ResourceLimitError
from .trees import LEAF, BinaryTree, enumerate_trees, parse_tree, to_string

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinaryTree",
    "ClassPartition",
    "FactorizationError",
    "LEAF",
    "Params",
    "ResourceLimitError",
    "WeightedTree",
    "check_conjecture",
    "class_key",
    "count_classes",
    "enumerate_trees",
    "max_class_size",
    "parse_tree",
    "partition",
    "phi",
    "to_string",
]
