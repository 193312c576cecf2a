"""Exact engine for finite categories, truncated simplicial sets, and
homotopy colimits, certified by an integral homology oracle."""

from .errors import (
    BudgetExceeded,
    DocumentError,
    EngineError,
    TruncationMismatch,
    ValidationError,
)
from .fincat import FinCat, Functor, NatTrans, nerve
from .homology import is_homology_iso, sset_homology
from .sset import SimplicialMap, SimplicialSet, boundary, horn, standard_simplex

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DocumentError",
    "EngineError",
    "FinCat",
    "Functor",
    "NatTrans",
    "SimplicialMap",
    "SimplicialSet",
    "TruncationMismatch",
    "ValidationError",
    "boundary",
    "horn",
    "is_homology_iso",
    "nerve",
    "sset_homology",
    "standard_simplex",
    "__version__",
]
