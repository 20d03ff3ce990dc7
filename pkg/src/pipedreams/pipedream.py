"""
Pipedreams as sets of crossing cells inside the size-n staircase, ladder
moves on them, and the single-column sweep that the maximal-pipedream
algorithm is built from.

A cross at (i, j) acts on adjacent positions i+j-1 and i+j.  The pipedream's
permutation is the Demazure (0-Hecke) product of those letters read row by
row from the top, right to left inside a row: a letter that would undo an
earlier crossing of the same two pipes is ignored.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple, TypeVar

from .diagram import Cell, Diagram, left_justify
from .perm import Permutation
from .stats import rothe

__all__ = [
    "Pipedream",
    "LadderSite",
    "MoveKind",
    "Move",
    "staircase",
    "reading_word",
    "demazure_product",
    "permutation_of",
    "bottom_pipedream",
    "ladder_destination",
    "ladder_sites",
    "apply_ladder",
    "sweep_column",
    "enumerate_pd",
    "initial_segment",
    "acts_initially",
    "is_paired",
]


def staircase(n: int) -> list[Cell]:
    """All cells a size-n pipedream may cross in, row-major."""
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


@dataclass(frozen=True)
class Pipedream:
    n: int
    crosses: Diagram

    def __post_init__(self):
        if not isinstance(self.crosses, Diagram):
            object.__setattr__(self, "crosses", Diagram(self.crosses))
        for i, j in self.crosses:
            if not (1 <= i <= self.n - 1 and 1 <= j <= self.n - i):
                raise ValueError(f"cross {(i, j)} lies outside the size-{self.n} staircase")

    def __contains__(self, cell: object) -> bool:
        return cell in self.crosses

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.crosses)

    def __len__(self) -> int:
        return len(self.crosses)


class MoveKind(enum.Enum):
    REGULAR = "R"
    K = "K"


class Move(NamedTuple):
    """A ladder move of the cross at (row, col) to (dest_row, col + 1)."""

    row: int
    col: int
    dest_row: int
    kind: MoveKind

    def __str__(self) -> str:
        return f"({self.row}→{self.dest_row},{self.kind.value})"


class LadderSite(NamedTuple):
    r: int
    c: int
    r_prime: int
    bar: int = 1


def reading_word(cells: Iterable[Cell]) -> list[int]:
    ordered = sorted(cells, key=lambda rc: (rc[0], -rc[1]))
    return [i + j - 1 for i, j in ordered]


def demazure_product(word: Iterable[int], n: int) -> Permutation:
    """
    Demazure product s_{k1} * s_{k2} * ... in S_n.

    ``state[p]`` holds the pipe sitting at position p+1; two pipes are
    swapped only if they have not crossed already, i.e. if they are still in
    increasing order.
    """
    state = list(range(1, n + 1))
    for k in word:
        if not 1 <= k < n:
            raise ValueError(f"letter s_{k} is not a generator of S_{n}")
        if state[k - 1] < state[k]:
            state[k - 1], state[k] = state[k], state[k - 1]
    return Permutation(tuple(state))


def permutation_of(P: Pipedream) -> Permutation:
    return demazure_product(reading_word(P.crosses), P.n)


def bottom_pipedream(w: Permutation) -> Pipedream:
    """The left-justified Rothe diagram; its row weight is invcode(w)."""
    return Pipedream(w.n, left_justify(rothe(w)))


def ladder_destination(cells, r: int, c: int, bar: int = 1) -> int | None:
    """
    Row r' of the empty pair (r', c), (r', c+1) that the cross at (r, c) can
    ladder-move to, looking only at rows >= bar; None if no move exists.
    """
    if (r, c) not in cells or (r, c + 1) in cells:
        return None
    for rr in range(r - 1, bar - 1, -1):
        left, right = (rr, c) in cells, (rr, c + 1) in cells
        if not left and not right:
            return rr
        if left != right:
            return None
    return None


def ladder_sites(P: Pipedream | Diagram, bar: int = 1) -> list[LadderSite]:
    if bar < 1:
        raise ValueError("bar must be at least 1")
    cells = _cells(P)
    sites = []
    for r, c in sorted(cells):
        if r < bar:
            continue
        rp = ladder_destination(cells, r, c, bar)
        if rp is not None:
            sites.append(LadderSite(r, c, rp, bar))
    return sites


_D = TypeVar("_D", Pipedream, Diagram)


def apply_ladder(P: _D, site: LadderSite, kind: MoveKind | str = MoveKind.REGULAR) -> _D:
    kind = MoveKind(kind) if not isinstance(kind, MoveKind) else kind
    cells = set(_cells(P))
    r, c, rp, bar = site
    if ladder_destination(cells, r, c, bar) != rp:
        raise ValueError(f"no ladder move from {(r, c)} to {(rp, c + 1)} with bar {bar}")
    cells.add((rp, c + 1))
    if kind is MoveKind.REGULAR:
        cells.discard((r, c))
    return _rewrap(P, cells)


def sweep_column(D: _D, bar: int, col: int) -> tuple[_D, list[Move]]:
    """
    Scan column ``col`` below the bar from top to bottom, ladder-moving every
    cross that can move; the last move of the column is then turned into a
    K-ladder move by putting its source cross back.

    Returns the new diagram and the moves in order.
    """
    if bar < 1 or col < 1:
        raise ValueError("bar and column must be at least 1")
    cells = set(_cells(D))
    moves: list[Move] = []
    for r in sorted(r for r, c in cells if c == col and r >= bar):
        rp = ladder_destination(cells, r, col, bar)
        if rp is None:
            continue
        cells.discard((r, col))
        cells.add((rp, col + 1))
        moves.append(Move(r, col, rp, MoveKind.REGULAR))
    if moves:
        last = moves[-1]
        cells.add((last.row, col))
        moves[-1] = last._replace(kind=MoveKind.K)
    return _rewrap(D, cells), moves


def enumerate_pd(w: Permutation) -> frozenset[Pipedream]:
    """Closure of the bottom pipedream under regular and K-ladder moves."""
    start = frozenset(bottom_pipedream(w).crosses.cells)
    seen = {start}
    queue = deque([start])
    while queue:
        cells = queue.popleft()
        for r, c in cells:
            rp = ladder_destination(cells, r, c)
            if rp is None:
                continue
            grown = cells | {(rp, c + 1)}
            for nxt in (grown - {(r, c)}, grown):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(Pipedream(w.n, Diagram(cells)) for cells in seen)


def initial_segment(D: Pipedream | Diagram, i: int, c: int) -> frozenset[Cell]:
    """The unbroken run of cells in column c starting at row i."""
    cells = _cells(D)
    run = set()
    r = i
    while (r, c) in cells:
        run.add((r, c))
        r += 1
    return frozenset(run)


def acts_initially(D: Pipedream | Diagram, i: int, c: int) -> bool:
    """True when the sweep of column c with the bar one row lower changes nothing."""
    return not sweep_column(_as_diagram(D), i + 1, c)[1]


def is_paired(D: Pipedream | Diagram, i: int, c: int) -> bool:
    """
    Every unmatched cross in column c (at row >= i) sees, above a block of
    full rows, an unmatched cross in column c+1 at row >= i, and every
    unmatched cross in column c+1 sees one in column c below in the same way.
    """
    cells = _cells(D)
    rows = {r for r, cc in cells if cc in (c, c + 1) and r >= i}
    for R in rows:
        left, right = (R, c) in cells, (R, c + 1) in cells
        if left and not right:
            r = R - 1
            while r >= i and (r, c) in cells and (r, c + 1) in cells:
                r -= 1
            if r < i or (r, c) in cells or (r, c + 1) not in cells:
                return False
        elif right and not left:
            top = max(rows)
            r = R + 1
            while r <= top and (r, c) in cells and (r, c + 1) in cells:
                r += 1
            if (r, c) not in cells or (r, c + 1) in cells:
                return False
    return True


def _cells(D) -> frozenset[Cell]:
    if isinstance(D, Pipedream):
        return D.crosses.cells
    if isinstance(D, Diagram):
        return D.cells
    return frozenset(D)


def _as_diagram(D) -> Diagram:
    return D.crosses if isinstance(D, Pipedream) else D


def _rewrap(D, cells) -> Pipedream | Diagram:
    if isinstance(D, Pipedream):
        return Pipedream(D.n, Diagram(cells))
    return Diagram(cells)
