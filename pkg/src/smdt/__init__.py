"""Decision-tree complexity of string matching: periods, query algorithms,
exact small-instance complexity, Tuza's criteria and the algebraic test."""

from .errors import (
    AlphabetUnsupported,
    InstanceTooLarge,
    InvalidPattern,
    NotABifix,
    PatternNotBifixFree,
    PreconditionViolated,
    RootFindingFailed,
    SmdtError,
)
from .pattern import Pattern, PeriodSet, bifixes, is_bifix_free, periods

__all__ = [
    "AlphabetUnsupported",
    "InstanceTooLarge",
    "InvalidPattern",
    "NotABifix",
    "Pattern",
    "PatternNotBifixFree",
    "PeriodSet",
    "PreconditionViolated",
    "RootFindingFailed",
    "SmdtError",
    "bifixes",
    "is_bifix_free",
    "periods",
]
