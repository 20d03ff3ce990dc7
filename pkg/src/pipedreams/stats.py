"""
Permutation statistics read off the Rothe diagram and its dark clouds:
rajcode, the inverse rajcode, movecode, regularity, and the recursive
versions of each that go through ``w = (a, u)``.

>>> from pipedreams.perm import parse_permutation
>>> w = parse_permutation("4617352")
>>> rajcode(w), rajcode_inv(w), movecode(w), reg(w)
(WeakComposition((4, 4, 2, 3, 1, 1)), WeakComposition((4, 5, 3, 1, 2)), WeakComposition((1, 3, 2, 0, 2)), 3)
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import WeakComposition
from .diagram import Diagram, col_weight, dark, row_weight
from .perm import Permutation, decompose, invcode

__all__ = [
    "rothe",
    "dark_clouds",
    "snow_diagram",
    "left_snow_diagram",
    "rajcode",
    "rajcode_inv",
    "movecode",
    "d_count",
    "reg",
    "rajcode_recursive",
    "rajcode_inv_recursive",
    "movecode_recursive",
    "rothe_recursive",
    "dark_recursive",
]


@lru_cache(maxsize=None)
def rothe(w: Permutation) -> Diagram:
    """Cells (i, w(j)) for every inversion i < j, w(i) > w(j)."""
    ol = w.one_line
    return Diagram(
        (i + 1, ol[j])
        for i in range(len(ol))
        for j in range(i + 1, len(ol))
        if ol[i] > ol[j]
    )


@lru_cache(maxsize=None)
def dark_clouds(w: Permutation) -> Diagram:
    return dark(rothe(w))


def snow_diagram(w: Permutation) -> tuple[Diagram, Diagram]:
    """
    Return (snow diagram, filled cells): each dark cloud fills every empty
    position above it in its column.
    """
    D = rothe(w)
    snow = {(r2, c) for r, c in dark_clouds(w) for r2 in range(1, r) if (r2, c) not in D}
    return D | snow, Diagram(snow)


def left_snow_diagram(w: Permutation) -> tuple[Diagram, Diagram]:
    """Like :func:`snow_diagram` but filling to the left of each dark cloud."""
    D = rothe(w)
    snow = {(r, c2) for r, c in dark_clouds(w) for c2 in range(1, c) if (r, c2) not in D}
    return D | snow, Diagram(snow)


def rajcode(w: Permutation) -> WeakComposition:
    return row_weight(snow_diagram(w)[0])


def rajcode_inv(w: Permutation) -> WeakComposition:
    """rajcode of the inverse, computed as a column weight without inverting."""
    return col_weight(left_snow_diagram(w)[0])


def movecode(w: Permutation) -> WeakComposition:
    """Per column, the Rothe cells with no dark cloud strictly to their right in their row."""
    last_cloud = {r: c for r, c in dark_clouds(w)}
    counts: dict[int, int] = {}
    for r, c in rothe(w):
        if last_cloud.get(r, 0) <= c:
            counts[c] = counts.get(c, 0) + 1
    return WeakComposition(counts.get(c, 0) for c in range(1, max(counts, default=0) + 1))


def d_count(w: Permutation, c: int) -> int:
    """Number of dark clouds strictly right of column ``c``."""
    if c < 0:
        raise ValueError("column must be nonnegative")
    return sum(1 for _, col in dark_clouds(w) if col > c)


def reg(w: Permutation) -> int:
    return rajcode(w).size - invcode(w).size


def rajcode_recursive(w: Permutation) -> WeakComposition:
    if w.n == 1:
        return WeakComposition()
    a, u = decompose(w)
    return rajcode_recursive(u).prepended(a + d_count(u, a))


def rajcode_inv_recursive(w: Permutation) -> WeakComposition:
    if w.n == 1:
        return WeakComposition()
    a, u = decompose(w)
    code = rajcode_inv_recursive(u).inserted(a + 1, d_count(u, a))
    return code + [1] * a


def movecode_recursive(w: Permutation) -> WeakComposition:
    if w.n == 1:
        return WeakComposition()
    a, u = decompose(w)
    entries = list(movecode_recursive(u).inserted(a + 1, 0).padded(a + 1))
    for p in range(a, 0, -1):
        entries[p - 1] += 1
        if entries[p - 1] == 1:
            break
    return WeakComposition(entries)


def _lift(D: Diagram, a: int) -> Diagram:
    # shift down one row, and right one column past column a
    return Diagram((r + 1, c if c <= a else c + 1) for r, c in D)


def rothe_recursive(w: Permutation) -> Diagram:
    if w.n == 1:
        return Diagram()
    a, u = decompose(w)
    return _lift(rothe_recursive(u), a) | {(1, c) for c in range(1, a + 1)}


def dark_recursive(w: Permutation) -> Diagram:
    if w.n == 1:
        return Diagram()
    a, u = decompose(w)
    lifted = _lift(dark_recursive(u), a)
    used = {c for _, c in lifted}
    # columns 1..a may all be taken already (e.g. w = 231); then row 1 gets no cloud
    free = [c for c in range(1, a + 1) if c not in used]
    return lifted | {(1, free[-1])} if free else lifted
