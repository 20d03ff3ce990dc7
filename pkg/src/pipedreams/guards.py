"""Size limits for the exponential brute-force routines."""

from __future__ import annotations

import os

__all__ = ["GuardExceeded", "size_guard", "check_size"]

ENV_VAR = "PIPEDREAM_MAX_N"


class GuardExceeded(RuntimeError):
    """Requested size is larger than a brute-force guard allows."""


def size_guard(default: int) -> int:
    """``PIPEDREAM_MAX_N`` in the environment replaces any default guard."""
    override = os.environ.get(ENV_VAR)
    return int(override) if override else default


def check_size(n: int, default: int, what: str, max_n: int | None = None) -> None:
    limit = size_guard(default) if max_n is None else max_n
    if n > limit:
        raise GuardExceeded(f"{what} is limited to n <= {limit} (got n = {n}); set {ENV_VAR} to raise it")
