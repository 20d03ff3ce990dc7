"""
Weak compositions: finitely supported sequences of nonnegative integers.

Entries are addressed 1-based, so ``alpha[1]`` is the first entry and any
index past the support reads as 0.  Trailing zeros are never stored, which
makes equality and hashing ignore them.

>>> alpha = WeakComposition([0, 2, 2, 0, 0])
>>> alpha
WeakComposition((0, 2, 2))
>>> alpha[2], alpha[7]
(2, 0)
>>> alpha == (0, 2, 2, 0)
True
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

__all__ = ["WeakComposition"]


def _trim(entries: tuple[int, ...]) -> tuple[int, ...]:
    end = len(entries)
    while end and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


class WeakComposition:
    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int] = ()):
        values = tuple(int(e) for e in entries)
        for pos, value in enumerate(values, start=1):
            if value < 0:
                raise ValueError(f"negative entry {value} at position {pos}")
        self._entries = _trim(values)

    @property
    def entries(self) -> tuple[int, ...]:
        """Entries up to the last positive one."""
        return self._entries

    @property
    def size(self) -> int:
        """Sum of all entries."""
        return sum(self._entries)

    def __getitem__(self, i: int) -> int:
        if not isinstance(i, int):
            raise TypeError("weak composition indices are integers")
        if i < 1:
            raise IndexError(f"weak composition index {i} < 1")
        return self._entries[i - 1] if i <= len(self._entries) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeakComposition):
            return self._entries == other._entries
        if isinstance(other, (tuple, list)):
            return self._entries == _trim(tuple(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"WeakComposition({self._entries!r})"

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self._entries)) + ")"

    def __add__(self, other: WeakComposition | Iterable[int]) -> WeakComposition:
        other = other if isinstance(other, WeakComposition) else WeakComposition(other)
        width = max(len(self), len(other))
        return WeakComposition(self[i] + other[i] for i in range(1, width + 1))

    def padded(self, length: int) -> tuple[int, ...]:
        """The first ``length`` entries (at least the full support)."""
        return self._entries + (0,) * max(0, length - len(self._entries))

    def incremented(self, i: int, by: int = 1) -> WeakComposition:
        values = list(self.padded(i))
        values[i - 1] += by
        return WeakComposition(values)

    def inserted(self, i: int, value: int) -> WeakComposition:
        """Insert ``value`` so that it becomes entry ``i``."""
        values = list(self.padded(i - 1))
        values.insert(i - 1, value)
        return WeakComposition(values)

    def prepended(self, value: int) -> WeakComposition:
        return WeakComposition((value,) + self._entries)

    def shifted(self, k: int = 1) -> WeakComposition:
        """Prepend ``k`` zeros, i.e. move every variable index up by ``k``."""
        return WeakComposition((0,) * k + self._entries)

    def dominated_by(self, other: WeakComposition | Iterable[int]) -> bool:
        """True when every entry is at most the matching entry of ``other``."""
        other = other if isinstance(other, WeakComposition) else WeakComposition(other)
        return all(a <= other[i] for i, a in enumerate(self._entries, start=1))
