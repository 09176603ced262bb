"""Size guards for the exhaustive kernels.

The certificate search, canonical labeling, and cycle listing are exact
exponential procedures, capped at 14 vertices; the extremal search is
capped at 12.  The environment variable SP_EXTREMAL_MAX_N may lower
(never raise) these caps, e.g. to keep accidental large runs cheap on
shared machines.
"""

from __future__ import annotations

import os

ENV_MAX_N = "SP_EXTREMAL_MAX_N"

EXACT_MAX_N = 14   # all_cycles, find_k4_minor, canonical_form, are_isomorphic
SEARCH_MAX_N = 12  # extremal_search and friends


def effective_limit(default: int) -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    return min(default, value)


def check_size(n: int, default: int, what: str) -> None:
    limit = effective_limit(default)
    if n > limit:
        raise ValueError(f"{what} is limited to n <= {limit}, got n={n}")
