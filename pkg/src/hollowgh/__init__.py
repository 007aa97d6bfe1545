"""Exact-arithmetic bitableau bases for hollow Garsia-Haiman modules."""

from .exactpoly import SparsePoly, apply_diff
from .latticediag import HollowGamma, delta
from .symfun import SeriesTable, gaussian_binomial
from .tableaux import (
    Bitableau,
    Filling,
    ResourceCapError,
    cocharge_diagram,
    compare_bitableaux,
    decompose_columnstrict,
    compose_columnstrict,
    enumerate_syt,
    standardize,
)
from .bitab import build, per_applied_to_delta, straighten
from .ghmod import (
    annihilation_check,
    basis,
    graded_character,
    harmonic_series,
    hilbert_closed,
    ideal_generators,
    verify_independence,
)

__version__ = "0.1.0"

__all__ = [
    "Bitableau",
    "Filling",
    "HollowGamma",
    "ResourceCapError",
    "SeriesTable",
    "SparsePoly",
    "annihilation_check",
    "apply_diff",
    "basis",
    "build",
    "cocharge_diagram",
    "compare_bitableaux",
    "compose_columnstrict",
    "decompose_columnstrict",
    "delta",
    "enumerate_syt",
    "gaussian_binomial",
    "graded_character",
    "harmonic_series",
    "hilbert_closed",
    "ideal_generators",
    "per_applied_to_delta",
    "standardize",
    "straighten",
    "verify_independence",
]
