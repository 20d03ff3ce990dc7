"""
Permutations of [n] in one-line notation, their inversion codes, and the
``w = (a, u)`` decomposition that peels off the first code entry.

Values are 1-based throughout: ``w(i)`` is the image of ``i``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .compositions import WeakComposition

__all__ = [
    "Permutation",
    "PermutationError",
    "parse_permutation",
    "permutations",
    "inverse",
    "invcode",
    "from_invcode",
    "decompose",
    "compose",
]


class PermutationError(ValueError):
    """Malformed permutation text or out-of-range input to a code bijection."""


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", values)
        n = len(values)
        if n < 1:
            raise PermutationError("a permutation needs at least one entry")
        seen: dict[int, int] = {}
        for pos, v in enumerate(values, start=1):
            if not 1 <= v <= n:
                raise PermutationError(f"value {v} at position {pos} is outside 1..{n}")
            if v in seen:
                raise PermutationError(
                    f"value {v} at position {pos} duplicates position {seen[v]}"
                )
            seen[v] = pos

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __len__(self) -> int:
        return len(self.one_line)

    def __iter__(self) -> Iterator[int]:
        return iter(self.one_line)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.one_line, start=1))

    def __str__(self) -> str:
        return ",".join(map(str, self.one_line))

    def digits(self) -> str:
        """Compact digit-string form; only meaningful for n <= 9."""
        if self.n > 9:
            raise PermutationError("digit form needs n <= 9")
        return "".join(map(str, self.one_line))


def parse_permutation(text: str) -> Permutation:
    """
    Read a permutation from a digit string (``"4617352"``, n <= 9) or a
    comma-separated list (``"4,6,1,7,3,5,2"``).
    """
    text = text.strip()
    if not text:
        raise PermutationError("empty permutation text")
    if "," in text:
        values = []
        for pos, piece in enumerate(text.split(","), start=1):
            piece = piece.strip()
            if not piece.isdigit():
                raise PermutationError(f"entry {piece!r} at position {pos} is not a positive integer")
            values.append(int(piece))
    else:
        for pos, ch in enumerate(text, start=1):
            if not ch.isdigit():
                raise PermutationError(f"character {ch!r} at position {pos} is not a digit")
        if len(text) > 9:
            raise PermutationError("digit form only supports n <= 9; use commas")
        values = [int(ch) for ch in text]
    return Permutation(tuple(values))


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def inverse(w: Permutation) -> Permutation:
    v = [0] * w.n
    for i, wi in enumerate(w.one_line, start=1):
        v[wi - 1] = i
    return Permutation(tuple(v))


def invcode(w: Permutation) -> WeakComposition:
    """Entry i counts the j > i with w(j) < w(i) (the Lehmer code)."""
    ol = w.one_line
    return WeakComposition(
        sum(1 for later in ol[i + 1:] if later < wi) for i, wi in enumerate(ol)
    )


def from_invcode(alpha: WeakComposition | Iterable[int], n: int) -> Permutation:
    alpha = alpha if isinstance(alpha, WeakComposition) else WeakComposition(alpha)
    if len(alpha) > n:
        raise PermutationError(f"code {alpha} has support beyond n={n}")
    available = list(range(1, n + 1))
    values = []
    for i in range(1, n + 1):
        if alpha[i] > n - i:
            raise PermutationError(f"code entry {i} is {alpha[i]}, must be at most {n - i}")
        values.append(available.pop(alpha[i]))
    return Permutation(tuple(values))


def decompose(w: Permutation) -> tuple[int, Permutation]:
    """Split w into its first code entry a and the u in S_{n-1} carrying the rest of the code."""
    if w.n < 2:
        raise PermutationError("cannot decompose a permutation of size 1")
    first = w(1)
    u = tuple(v - 1 if v > first else v for v in w.one_line[1:])
    return first - 1, Permutation(u)


def compose(a: int, u: Permutation) -> Permutation:
    """Inverse of :func:`decompose`."""
    if not 0 <= a <= u.n:
        raise PermutationError(f"first code entry {a} outside 0..{u.n}")
    first = a + 1
    return Permutation((first,) + tuple(v + 1 if v >= first else v for v in u.one_line))
