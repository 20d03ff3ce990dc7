"""ASCII pictures of diagrams and pipedreams."""

from __future__ import annotations

from collections.abc import Mapping

from .diagram import Cell, Diagram
from .perm import Permutation
from .pipedream import Pipedream
from .stats import dark_clouds, left_snow_diagram, rothe, snow_diagram

__all__ = [
    "CELL",
    "EMPTY",
    "DARK",
    "SNOW",
    "render_diagram",
    "render_pipedream",
    "render_rothe",
    "render_snow",
    "render_left_snow",
]

CELL, EMPTY, DARK, SNOW = "□", "·", "●", "*"


def render_diagram(
    D: Diagram,
    rows: int | None = None,
    cols: int | None = None,
    marks: Mapping[Cell, str] | None = None,
) -> str:
    """One text line per row; ``marks`` overrides the glyph of individual cells."""
    rows = D.max_row if rows is None else rows
    cols = D.max_col if cols is None else cols
    marks = marks or {}
    lines = []
    for r in range(1, rows + 1):
        glyphs = [marks.get((r, c), CELL if (r, c) in D else EMPTY) for c in range(1, cols + 1)]
        lines.append(" ".join(glyphs))
    return "\n".join(lines)


def render_pipedream(P: Pipedream | Diagram, n: int | None = None) -> str:
    """'+' for a cross and '.' for an elbow; row i shows its n-i crossable tiles."""
    if isinstance(P, Pipedream):
        n, cells = P.n, P.crosses
    else:
        cells = P
        n = n if n is not None else max(cells.max_row + cells.max_col, 1)
    return "\n".join(
        "".join("+" if (i, j) in cells else "." for j in range(1, n - i + 1))
        for i in range(1, n)
    )


def render_rothe(w: Permutation) -> str:
    marks = {cell: DARK for cell in dark_clouds(w)}
    return render_diagram(rothe(w), w.n, w.n, marks)


def render_snow(w: Permutation) -> str:
    snow, filled = snow_diagram(w)
    marks = {cell: SNOW for cell in filled}
    marks.update({cell: DARK for cell in dark_clouds(w)})
    return render_diagram(snow, w.n, w.n, marks)


def render_left_snow(w: Permutation) -> str:
    snow, filled = left_snow_diagram(w)
    marks = {cell: SNOW for cell in filled}
    marks.update({cell: DARK for cell in dark_clouds(w)})
    return render_diagram(snow, w.n, w.n, marks)
