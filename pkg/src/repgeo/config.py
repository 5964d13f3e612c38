"""Resource caps and search bounds.

Every exhaustive enumeration in the package is guarded by a cap; hitting
one raises instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EnumerationCaps:
    max_group_order: int = 64
    max_dim: int = 8
    max_prime: int = 97
    # candidate generator-image tuples when enumerating group homs
    max_hom_candidates: int = 2**20
    # matrices enumerated per group hom when solving equivariance systems
    max_matrices_per_beta: int = 2**20
    # assignments |V|^|X| * |G|^|Y| scanned by the solution-set filter
    max_search_space: int = 2**24


@dataclass(frozen=True)
class SearchBounds:
    """Bounds for the witness / separating-formula scans.

    The defaults are just large enough to contain the one-variable
    two-term implication used by the counterexample audit.
    """

    max_xvars: int = 1
    max_yvars: int = 1
    max_system: int = 1
    max_terms: int = 2
    max_word_len: int = 2
    max_premises: int = 2


DEFAULT_CAPS = EnumerationCaps()
DEFAULT_BOUNDS = SearchBounds()
