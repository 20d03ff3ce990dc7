"""
Construction of the maximal pipedream by column sweeps, the recorded trace
of that run, and the IR monomial chain from invcode(w) up to rajcode(w).

>>> from pipedreams.perm import parse_permutation
>>> P, trace = max_pipedream(parse_permutation("14523"))
>>> sorted(P.crosses.cells)
[(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
>>> [str(a) for a in k_move_weights(trace)]
['(1, 2, 2)', '(2, 2, 2)']
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .compositions import WeakComposition
from .diagram import Diagram, row_weight
from .perm import Permutation, PermutationError, decompose, invcode
from .pipedream import Move, MoveKind, Pipedream, bottom_pipedream, sweep_column
from .stats import d_count, rajcode, reg

__all__ = [
    "Step",
    "AlgorithmTrace",
    "IRSequence",
    "max_pipedream",
    "last_iteration_column_counts",
    "ir_sequence",
    "ir_recursive",
    "k_move_weights",
    "sweep_schedule",
]


@dataclass(frozen=True)
class Step:
    bar: int
    col: int
    moves: tuple[Move, ...]
    before: Diagram
    after: Diagram

    def to_text(self) -> str:
        return f"bar={self.bar} col={self.col} moves=[{','.join(map(str, self.moves))}]"


@dataclass
class AlgorithmTrace:
    n: int
    steps: list[Step] = field(default_factory=list)
    # (number of the K-move, row weight right after it)
    k_events: list[tuple[int, WeakComposition]] = field(default_factory=list)

    @property
    def per_column_counts(self) -> dict[int, int]:
        """Cells moved per column while the bar sits above row 1."""
        return {s.col: len(s.moves) for s in self.steps if s.bar == 1}

    def to_text(self) -> str:
        lines = [s.to_text() for s in self.steps]
        lines += [f"K{idx}: {weight}" for idx, weight in self.k_events]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "steps": [
                {
                    "bar": s.bar,
                    "col": s.col,
                    "moves": [
                        {"from": [m.row, m.col], "to": [m.dest_row, m.col + 1], "kind": m.kind.value}
                        for m in s.moves
                    ],
                }
                for s in self.steps
            ],
            "k_events": [[idx, list(weight)] for idx, weight in self.k_events],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def sweep_schedule(n: int) -> list[tuple[int, int]]:
    """(bar, column) pairs in application order: bars n-2..1, columns n-1-bar..1."""
    return [(i, c) for i in range(n - 2, 0, -1) for c in range(n - 1 - i, 0, -1)]


def max_pipedream(w: Permutation) -> tuple[Pipedream, AlgorithmTrace]:
    D = bottom_pipedream(w).crosses
    trace = AlgorithmTrace(w.n)
    for bar, col in sweep_schedule(w.n):
        after, moves = sweep_column(D, bar, col)
        trace.steps.append(Step(bar, col, tuple(moves), D, after))
        if moves and moves[-1].kind is MoveKind.K:
            trace.k_events.append((len(trace.k_events) + 1, row_weight(after)))
        D = after
    return Pipedream(w.n, D), trace


def last_iteration_column_counts(w: Permutation) -> WeakComposition:
    if w.n < 2:
        raise PermutationError("needs n >= 2")
    counts = max_pipedream(w)[1].per_column_counts
    return WeakComposition(counts.get(c, 0) for c in range(1, w.n))


@dataclass(frozen=True)
class IRSequence:
    monomials: tuple[WeakComposition, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, i: int) -> WeakComposition:
        return self.monomials[i]

    def __iter__(self):
        return iter(self.monomials)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IRSequence):
            return self.monomials == other.monomials
        if isinstance(other, (tuple, list)):
            return len(other) == len(self.monomials) and all(
                m == o for m, o in zip(self.monomials, other)
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x^{m}" for m in self.monomials) + ")"


def ir_sequence(w: Permutation) -> IRSequence:
    """
    Start at invcode(w); each step raises the largest variable index p whose
    increment still divides x^rajcode(w).
    """
    target = rajcode(w)
    current = invcode(w)
    chain = [current]
    for _ in range(reg(w)):
        p = max(p for p in range(1, len(target) + 1) if current[p] + 1 <= target[p])
        current = current.incremented(p)
        chain.append(current)
    return IRSequence(tuple(chain))


def ir_recursive(w: Permutation) -> IRSequence:
    if w.n == 1:
        return IRSequence((WeakComposition(),))
    a, u = decompose(w)
    inner = ir_recursive(u)
    head = [m.shifted().incremented(1, a) for m in inner]
    top = inner[-1].shifted()
    tail = [top.incremented(1, a + j) for j in range(1, d_count(u, a) + 1)]
    return IRSequence(tuple(head + tail))


def k_move_weights(trace: AlgorithmTrace) -> list[WeakComposition]:
    return [weight for _, weight in trace.k_events]
