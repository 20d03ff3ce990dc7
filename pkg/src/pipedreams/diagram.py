"""
Diagrams: finite sets of (row, column) cells in matrix coordinates.

Row 1 is the top row and column 1 the leftmost.  Iteration is row-major
ascending, which the scanning procedures below rely on.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .compositions import WeakComposition

__all__ = [
    "Cell",
    "Diagram",
    "row_weight",
    "col_weight",
    "left_justify",
    "conjugate",
    "shift_down",
    "dark",
]

Cell = tuple[int, int]


class Diagram:
    __slots__ = ("_cells", "_sorted", "_rows", "_cols")

    def __init__(self, cells: Iterable[Cell] = ()):
        frozen = frozenset((int(r), int(c)) for r, c in cells)
        for r, c in frozen:
            if r < 1 or c < 1:
                raise ValueError(f"cell {(r, c)} is not in the positive quadrant")
        self._cells = frozen
        self._sorted: tuple[Cell, ...] | None = None
        self._rows: dict[int, tuple[int, ...]] | None = None
        self._cols: dict[int, tuple[int, ...]] | None = None

    @property
    def cells(self) -> frozenset[Cell]:
        return self._cells

    def sorted_cells(self) -> tuple[Cell, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._cells))
        return self._sorted

    def rows(self) -> dict[int, tuple[int, ...]]:
        """Row index -> sorted columns occupied in that row."""
        if self._rows is None:
            rows: dict[int, list[int]] = {}
            for r, c in self.sorted_cells():
                rows.setdefault(r, []).append(c)
            self._rows = {r: tuple(cs) for r, cs in rows.items()}
        return self._rows

    def cols(self) -> dict[int, tuple[int, ...]]:
        """Column index -> sorted rows occupied in that column."""
        if self._cols is None:
            cols: dict[int, list[int]] = {}
            for r, c in sorted(self._cells, key=lambda rc: (rc[1], rc[0])):
                cols.setdefault(c, []).append(r)
            self._cols = {c: tuple(rs) for c, rs in cols.items()}
        return self._cols

    def row(self, r: int) -> tuple[int, ...]:
        return self.rows().get(r, ())

    def column(self, c: int) -> tuple[int, ...]:
        return self.cols().get(c, ())

    @property
    def max_row(self) -> int:
        return max((r for r, _ in self._cells), default=0)

    @property
    def max_col(self) -> int:
        return max((c for _, c in self._cells), default=0)

    def __contains__(self, cell: object) -> bool:
        return cell in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells())

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Diagram):
            return self._cells == other._cells
        if isinstance(other, (set, frozenset)):
            return self._cells == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        return f"Diagram({list(self.sorted_cells())!r})"

    def __or__(self, other: Diagram | Iterable[Cell]) -> Diagram:
        return Diagram(self._cells | _as_cells(other))

    def __sub__(self, other: Diagram | Iterable[Cell]) -> Diagram:
        return Diagram(self._cells - _as_cells(other))

    def __and__(self, other: Diagram | Iterable[Cell]) -> Diagram:
        return Diagram(self._cells & _as_cells(other))

    def __le__(self, other: Diagram) -> bool:
        return self._cells <= other._cells


def _as_cells(other: Diagram | Iterable[Cell]) -> frozenset[Cell]:
    return other.cells if isinstance(other, Diagram) else frozenset(other)


def row_weight(D: Diagram) -> WeakComposition:
    return WeakComposition(len(D.row(r)) for r in range(1, D.max_row + 1))


def col_weight(D: Diagram) -> WeakComposition:
    return WeakComposition(len(D.column(c)) for c in range(1, D.max_col + 1))


def left_justify(D: Diagram) -> Diagram:
    return Diagram((r, c) for r, cs in D.rows().items() for c in range(1, len(cs) + 1))


def conjugate(D: Diagram) -> Diagram:
    return Diagram((c, r) for r, c in D)


def shift_down(D: Diagram, k: int) -> Diagram:
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return Diagram((r + k, c) for r, c in D)


def dark(D: Diagram) -> Diagram:
    """
    Dark clouds of ``D``.

    Rows are scanned bottom to top; a row contributes its rightmost cell
    whose column holds no dark cloud yet, if any.
    """
    taken: set[int] = set()
    clouds = []
    for r in sorted(D.rows(), reverse=True):
        free = [c for c in D.row(r) if c not in taken]
        if free:
            c = free[-1]
            taken.add(c)
            clouds.append((r, c))
    return Diagram(clouds)
