"""Work-limit plumbing for brute-force searches.

Large search boxes are refused up front rather than ground through.  The
limit counts elementary evaluations (membership tests or Riemann-Roch
dimension evaluations) and can be raised per call, via the environment,
or left at the default.
"""

from __future__ import annotations

import os

from .errors import BoxTooLarge

DEFAULT_WORK_LIMIT = 10**8
ENV_WORK_LIMIT = "PUREGAPS_WORK_LIMIT"


def resolve_work_limit(explicit: int | None = None) -> int:
    """Pick the effective limit: explicit argument, then environment, then default."""
    if explicit is not None:
        if explicit < 1:
            raise ValueError(f"work limit must be positive, got {explicit}")
        return explicit
    raw = os.environ.get(ENV_WORK_LIMIT)
    if raw is not None:
        value = int(raw)
        if value < 1:
            raise ValueError(f"{ENV_WORK_LIMIT} must be positive, got {raw}")
        return value
    return DEFAULT_WORK_LIMIT


def charge(estimated: int, limit: int, what: str) -> None:
    """Raise BoxTooLarge when an estimated evaluation count exceeds the limit."""
    if estimated > limit:
        raise BoxTooLarge(
            f"{what} needs about {estimated} evaluations, above the limit {limit}; "
            f"raise it explicitly or via {ENV_WORK_LIMIT}"
        )
