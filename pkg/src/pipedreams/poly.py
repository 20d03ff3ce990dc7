"""
Sparse integer polynomials in two alphabets x_1, x_2, ... and y_1, y_2, ...,
and the (double) Grothendieck polynomials obtained by summing over PD(w).

>>> from pipedreams.perm import parse_permutation
>>> print(grothendieck_double(parse_permutation("21")))
-x1*y1 + x1 + y1
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import lru_cache
from typing import NamedTuple

from .compositions import WeakComposition
from .diagram import row_weight
from .guards import check_size
from .perm import Permutation, invcode
from .pipedream import enumerate_pd
from .stats import rajcode

__all__ = [
    "Monomial",
    "Polynomial",
    "TermOrder",
    "random_admissible_order",
    "cross_factor",
    "grothendieck_double",
    "grothendieck_single",
    "degree_component",
    "top_degree",
    "bottom_degree",
    "leading_monomial",
    "per_degree_leading",
]

GROTHENDIECK_MAX_N = 7


def _trim(exps: Iterable[int]) -> tuple[int, ...]:
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


class Monomial(NamedTuple):
    x: tuple[int, ...] = ()
    y: tuple[int, ...] = ()

    @classmethod
    def of(cls, x: Iterable[int] = (), y: Iterable[int] = ()) -> Monomial:
        return cls(_trim(x), _trim(y))

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    @property
    def xexp(self) -> WeakComposition:
        return WeakComposition(self.x)

    @property
    def yexp(self) -> WeakComposition:
        return WeakComposition(self.y)

    @property
    def num_vars(self) -> int:
        return max(len(self.x), len(self.y))

    def times(self, other: Monomial) -> Monomial:
        return Monomial(_add(self.x, other.x), _add(self.y, other.y))

    def __str__(self) -> str:
        factors = [
            f"{name}{i}" + (f"^{e}" if e > 1 else "")
            for name, exps in (("x", self.x), ("y", self.y))
            for i, e in enumerate(exps, start=1)
            if e
        ]
        return "*".join(factors) or "1"


class TermOrder:
    """
    Weighted lexicographic order: compare the weight of a monomial first, then
    its exponents read in ``priority`` order (most significant variable first).

    Variables are named ("x", i) or ("y", i).  Only monomials in variables
    listed in ``priority`` can be compared.
    """

    def __init__(self, priority: Sequence[tuple[str, int]], weights: Mapping[tuple[str, int], int] | None = None):
        self.priority = tuple(priority)
        self.weights = dict(weights or {})
        self._known = set(self.priority)

    @classmethod
    def lex(cls, n: int) -> TermOrder:
        """x_n > ... > x_1 > y_n > ... > y_1, pure lex."""
        return cls([("x", i) for i in range(n, 0, -1)] + [("y", i) for i in range(n, 0, -1)])

    def key(self, m: Monomial) -> tuple:
        exps = {("x", i): e for i, e in enumerate(m.x, start=1) if e}
        exps.update({("y", i): e for i, e in enumerate(m.y, start=1) if e})
        unknown = exps.keys() - self._known
        if unknown:
            raise ValueError(f"term order does not rank variables {sorted(unknown)}")
        weight = sum(self.weights.get(v, 0) * e for v, e in exps.items())
        return (weight, tuple(exps.get(v, 0) for v in self.priority))

    def __repr__(self) -> str:
        return f"TermOrder(priority={self.priority!r}, weights={self.weights!r})"


def random_admissible_order(n: int, rng: random.Random) -> TermOrder:
    """
    A random term order with x_n > ... > x_1 and y_n > ... > y_1: the two
    chains are shuffled together for the lex tie-break, and each chain gets
    nondecreasing random weights.
    """
    xs = [("x", i) for i in range(n, 0, -1)]
    ys = [("y", i) for i in range(n, 0, -1)]
    slots = sorted(rng.sample(range(2 * n), n))
    priority, xi, yi = [], iter(xs), iter(ys)
    for k in range(2 * n):
        priority.append(next(xi) if k in slots else next(yi))
    weights = {}
    if rng.random() < 2 / 3:
        for chain in (xs, ys):
            values = sorted((rng.randint(0, 5) for _ in chain), reverse=True)
            weights.update(zip(chain, values))
    return TermOrder(priority, weights)


class Polynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for m, c in items:
            m = Monomial.of(m.x, m.y)
            acc[m] = acc.get(m, 0) + int(c)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls({Monomial(): c})

    @classmethod
    def x(cls, i: int) -> Polynomial:
        return cls({Monomial.of([0] * (i - 1) + [1]): 1})

    @classmethod
    def y(cls, j: int) -> Polynomial:
        return cls({Monomial.of((), [0] * (j - 1) + [1]): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(Monomial.of(m.x, m.y), 0)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other) -> Polynomial:
        return Polynomial.constant(other) if isinstance(other, int) else other

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + -self._coerce(other)

    def __rsub__(self, other: int) -> Polynomial:
        return -self + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    __rmul__ = __mul__

    @property
    def num_vars(self) -> int:
        return max((m.num_vars for m in self._terms), default=0)

    def degrees(self) -> list[int]:
        return sorted({m.degree for m in self._terms})

    def set_y_zero(self) -> Polynomial:
        return Polynomial({Monomial(m.x, ()): c for m, c in self._terms.items() if not any(m.y)})

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Monomial, int]]:
        """Terms from largest to smallest under ``order`` (default: the fixed lex order)."""
        order = order or TermOrder.lex(self.num_vars)
        return sorted(self._terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            body = str(m)
            if body == "1":
                text = str(abs(c))
            else:
                text = body if abs(c) == 1 else f"{abs(c)}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> list[list]:
        return [[list(m.x), list(m.y), c] for m, c in self.sorted_terms()]


@lru_cache(maxsize=None)
def cross_factor(i: int, j: int) -> Polynomial:
    """x_i + y_j - x_i*y_j"""
    xi, yj = Polynomial.x(i), Polynomial.y(j)
    return xi + yj - xi * yj


def grothendieck_double(w: Permutation, max_n: int | None = None) -> Polynomial:
    check_size(w.n, GROTHENDIECK_MAX_N, "Grothendieck expansion", max_n)
    total = Polynomial()
    for P in sorted(enumerate_pd(w), key=lambda P: P.crosses.sorted_cells()):
        term = Polynomial.constant(1)
        for i, j in P.crosses:
            term = term * cross_factor(i, j)
        total = total + term
    return total


def grothendieck_single(w: Permutation, max_n: int | None = None) -> Polynomial:
    check_size(w.n, GROTHENDIECK_MAX_N, "Grothendieck expansion", max_n)
    acc: dict[Monomial, int] = {}
    for P in enumerate_pd(w):
        m = Monomial.of(row_weight(P.crosses))
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(acc)


def degree_component(p: Polynomial, d: int) -> Polynomial:
    return Polynomial({m: c for m, c in p if m.degree == d})


def top_degree(p: Polynomial) -> Polynomial:
    degrees = p.degrees()
    return degree_component(p, degrees[-1]) if degrees else Polynomial()


def bottom_degree(p: Polynomial) -> Polynomial:
    degrees = p.degrees()
    return degree_component(p, degrees[0]) if degrees else Polynomial()


def leading_monomial(p: Polynomial, order: TermOrder | None = None) -> tuple[Monomial, int]:
    if not p:
        raise ValueError("the zero polynomial has no leading monomial")
    return p.sorted_terms(order)[0]


def per_degree_leading(w: Permutation, max_n: int | None = None) -> list[Monomial]:
    """Leading monomial of each homogeneous piece of the single polynomial, lowest degree first."""
    single = grothendieck_single(w, max_n)
    low, high = invcode(w).size, rajcode(w).size
    order = TermOrder.lex(w.n)
    out = []
    for d in range(low, high + 1):
        piece = degree_component(single, d)
        if not piece:
            raise ValueError(f"degree {d} component of the Grothendieck polynomial of {w} vanishes")
        out.append(leading_monomial(piece, order)[0])
    return out
