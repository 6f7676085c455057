import os
from dataclasses import dataclass

EXACT_CAP_ENV = "ORDIM_EXACT_CAP"


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for the exponential subroutines.

    dense_subset_cap: largest ground set on which ``minimum_dense_subset``
        runs exhaustive search (greedy set cover above it).
    dimension_cap: largest ground set on which ``dimension`` searches for
        realizers of size >= 3 exactly.
    """

    dense_subset_cap: int = 16
    dimension_cap: int = 14


def default_config() -> SearchConfig:
    cap = os.environ.get(EXACT_CAP_ENV)
    if cap is None:
        return SearchConfig()
    return SearchConfig(dimension_cap=int(cap))
