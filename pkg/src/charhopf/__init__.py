"""Exact Hopf algebra arithmetic for the character rings of GL, O and Sp.

Values are immutable sparse integer combinations tagged with their basis:
:class:`SymExpr` for the Schur, orthogonal and symplectic bracket bases,
:class:`DualExpr` for the starred dual bases, :class:`RationalExpr` for mixed
tensor characters, and :class:`TensorExpr` for coproducts.
"""

from .errors import (
    CharHopfError,
    CutoffError,
    EvaluationError,
    ModificationRuleRequired,
    ParseError,
    RingMismatchError,
)
from .expr import CharExpr, DualExpr, RationalBasis, RationalExpr, Ring, SymExpr, TensorExpr
from .partitions import Partition, PartitionSet, conjugate, frobenius, make_partition, partitions_up_to
from .series import SeriesKind, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CharExpr",
    "CharHopfError",
    "CutoffError",
    "DualExpr",
    "EvaluationError",
    "ModificationRuleRequired",
    "ParseError",
    "Partition",
    "PartitionSet",
    "RationalBasis",
    "RationalExpr",
    "Ring",
    "RingMismatchError",
    "SeriesKind",
    "SymExpr",
    "TensorExpr",
    "TruncatedSeries",
    "conjugate",
    "frobenius",
    "make_partition",
    "partitions_up_to",
]
