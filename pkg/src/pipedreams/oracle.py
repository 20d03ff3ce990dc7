"""
Brute-force reference implementations, kept independent of the fast paths
they check.

``trace_pipes`` follows pipes tile by tile through the staircase instead of
multiplying transpositions; ``subset_oracle`` filters every subset of the
staircase through it.
"""

from __future__ import annotations

import itertools

from .diagram import Diagram
from .guards import check_size
from .perm import Permutation
from .pipedream import Pipedream, staircase

__all__ = ["trace_pipes", "subset_oracle", "pipedreams_by_permutation"]

SUBSET_ORACLE_MAX_N = 5


def trace_pipes(n: int, crosses) -> Permutation:
    """
    Follow pipes 1..n from the top edge down to the left edge.

    Tiles are visited row by row from the top, right to left, so both inputs
    of a tile (from above and from the right) are known when it is reached.
    A cross tile whose two pipes have crossed before behaves as an elbow.
    Returns w with w(i) = the pipe leaving row i on the left.
    """
    crosses = set(crosses)
    from_above = {j: j for j in range(1, n + 1)}
    crossed: set[frozenset[int]] = set()
    exits = [0] * n
    for i in range(1, n + 1):
        width = n + 1 - i
        below: dict[int, int] = {}
        from_right = None
        for j in range(width, 0, -1):
            top = from_above.get(j)
            is_cross = (i, j) in crosses and j < width
            if is_cross and top is not None and from_right is not None:
                pair = frozenset((top, from_right))
                if pair in crossed:
                    is_cross = False
                else:
                    crossed.add(pair)
            if is_cross:
                below[j], from_right = top, from_right
            else:
                # elbow: top turns left, right turns down
                below[j], from_right = from_right, top
        exits[i - 1] = from_right
        from_above = {j: p for j, p in below.items() if p is not None}
    return Permutation(tuple(exits))


def subset_oracle(w: Permutation, max_n: int | None = None) -> frozenset[Pipedream]:
    """Every subset of the staircase whose traced permutation is w."""
    check_size(w.n, SUBSET_ORACLE_MAX_N, "subset oracle", max_n)
    cells = staircase(w.n)
    found = set()
    for k in range(len(cells) + 1):
        for subset in itertools.combinations(cells, k):
            if trace_pipes(w.n, subset) == w:
                found.add(Pipedream(w.n, Diagram(subset)))
    return frozenset(found)


def pipedreams_by_permutation(n: int) -> dict[Permutation, set[frozenset]]:
    """Group all 2^|staircase| subsets by traced permutation (one pass)."""
    cells = staircase(n)
    groups: dict[Permutation, set[frozenset]] = {}
    for k in range(len(cells) + 1):
        for subset in itertools.combinations(cells, k):
            groups.setdefault(trace_pipes(n, subset), set()).add(frozenset(subset))
    return groups
