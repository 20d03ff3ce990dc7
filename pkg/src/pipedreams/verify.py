"""
Exhaustive checks of the maximal-pipedream results over all of S_n.

Each claim is a predicate on a single permutation; :func:`verify` runs the
selected predicates over S_n and collects the permutations that fail.
Claim ids are stable strings used on the command line.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .diagram import col_weight, row_weight, shift_down
from .guards import check_size
from .maximal import ir_recursive, ir_sequence, k_move_weights, last_iteration_column_counts, max_pipedream
from .oracle import subset_oracle
from .perm import Permutation, decompose, invcode, inverse, permutations
from .pipedream import (
    demazure_product,
    enumerate_pd,
    initial_segment,
    is_paired,
    reading_word,
    staircase,
    sweep_column,
)
from .poly import (
    Monomial,
    grothendieck_double,
    grothendieck_single,
    leading_monomial,
    per_degree_leading,
    random_admissible_order,
    top_degree,
)
from .stats import (
    d_count,
    dark_clouds,
    dark_recursive,
    movecode,
    movecode_recursive,
    rajcode,
    rajcode_inv,
    rajcode_inv_recursive,
    rajcode_recursive,
    reg,
    rothe,
    rothe_recursive,
)

__all__ = ["CLAIMS", "Claim", "CheckResult", "VerificationReport", "verify", "UnknownClaim"]

POLY_MAX_N = 5
COMBINATORIAL_MAX_N = 7
ORDERS_PER_PERMUTATION = 3


class UnknownClaim(KeyError):
    pass


def _maximal_weights(w: Permutation) -> bool:
    P, _ = max_pipedream(w)
    return row_weight(P.crosses) == rajcode(w) and col_weight(P.crosses) == rajcode(inverse(w))


def _k_events_follow_ir(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    ir = ir_sequence(w)
    return len(trace.k_events) == reg(w) and k_move_weights(trace) == list(ir)[1:]


def _top_degree_leading(w: Permutation) -> bool:
    top = top_degree(grothendieck_double(w, max_n=w.n))
    target = Monomial.of(rajcode(w), rajcode(inverse(w)))
    rng = random.Random(str(w))
    orders = [None] + [random_admissible_order(w.n, rng) for _ in range(ORDERS_PER_PERMUTATION)]
    for order in orders:
        m, coeff = leading_monomial(top, order)
        if m != target or abs(coeff) != 1:
            return False
    return True


def _degree_range_and_leading_terms(w: Permutation) -> bool:
    degrees = grothendieck_single(w, max_n=w.n).degrees()
    if (degrees[0], degrees[-1]) != (invcode(w).size, rajcode(w).size):
        return False
    return per_degree_leading(w, max_n=w.n) == [Monomial.of(m) for m in ir_sequence(w)]


def _rajcode_recursions(w: Permutation) -> bool:
    if rajcode_recursive(w) != rajcode(w) or rajcode_inv_recursive(w) != rajcode_inv(w):
        return False
    if w.n == 1:
        return True
    a, u = decompose(w)
    return reg(w) - reg(u) == d_count(u, a)


def _diagram_recursions(w: Permutation) -> bool:
    return rothe_recursive(w) == rothe(w) and dark_recursive(w) == dark_clouds(w)


def _ir_recursion(w: Permutation) -> bool:
    if ir_recursive(w) != ir_sequence(w):
        return False
    if w.n == 1:
        return True
    a, u = decompose(w)
    return reg(w) == reg(u) + d_count(u, a)


def _movecode_recursion(w: Permutation) -> bool:
    return movecode_recursive(w) == movecode(w)


def _column_identity(w: Permutation) -> bool:
    raj_inv, mc = rajcode_inv(w), movecode(w)
    for c in range(1, w.n + 2):
        d = d_count(w, c)
        if raj_inv[c + 1] - max(mc[c + 1] - 1, 0) != d or raj_inv[c] - mc[c] != d:
            return False
    return True


def _last_iteration_counts(w: Permutation) -> bool:
    if w.n < 2:
        return True
    a, u = decompose(w)
    counts = last_iteration_column_counts(w)
    mc = movecode(u)
    return all(counts[c] == (mc[c] if c > a else 0) for c in range(1, w.n))


def _unit_increment(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    for step in trace.steps:
        if step.moves and row_weight(step.after) != row_weight(step.before).incremented(step.bar):
            return False
    return True


def _acts_initially_everywhere(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    return all(not sweep_column(s.before, s.bar + 1, s.col)[1] for s in trace.steps)


def _moves_chain_upward(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    for s in trace.steps:
        if not s.moves:
            continue
        sources = [m.row for m in s.moves]
        if sources != sorted(sources):
            return False
        previous = [s.bar] + sources[:-1]
        if [m.dest_row for m in s.moves] != previous:
            return False
        if row_weight(s.after) != row_weight(s.before).incremented(s.bar):
            return False
    return True


def _destinations_in_segment(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    for s in trace.steps:
        segment = initial_segment(s.after, s.bar, s.col + 1)
        if any((m.dest_row, s.col + 1) not in segment for m in s.moves):
            return False
    return True


def _moved_cells_characterized(w: Permutation) -> bool:
    _, trace = max_pipedream(w)
    for s in trace.steps:
        moved = {(m.row, s.col) for m in s.moves}
        if (s.bar, s.col) in s.before:
            if moved:
                return False
            continue
        expected = {
            (r, c) for r, c in initial_segment(s.before, s.bar + 1, s.col)
            if (r, c + 1) not in s.before
        }
        if moved != expected:
            return False
    return True


def _paired_sweeps(w: Permutation) -> bool:
    P, _ = max_pipedream(w)
    D = shift_down(P.crosses, 2)
    for c in range(w.n - 1, 0, -1):
        D, lower = sweep_column(D, 2, c)
        D, upper = sweep_column(D, 1, c + 1)
        if len(lower) != len(upper):
            return False
        upper_rows = [m.row for m in upper]
        for m in lower:
            if sum(1 for r in upper_rows if m.dest_row <= r < m.row) != 1:
                return False
        if not is_paired(D, 2, c):
            return False
    return True


def _top_row_sweeps_initial(w: Permutation) -> bool:
    P, _ = max_pipedream(w)
    D = shift_down(P.crosses, 1)
    for c in range(w.n - 1, 0, -1):
        if sweep_column(D, 2, c)[1]:
            return False
        D, _ = sweep_column(D, 1, c)
    return True


def _ladder_closure_matches_oracles(w: Permutation) -> bool:
    closure = {P.crosses.cells for P in enumerate_pd(w)}
    traced = {P.crosses.cells for P in subset_oracle(w, max_n=w.n)}
    cells = staircase(w.n)
    hecke = {
        frozenset(s)
        for k in range(len(cells) + 1)
        for s in itertools.combinations(cells, k)
        if demazure_product(reading_word(s), w.n) == w
    }
    return closure == traced == hecke


def _unique_maximal(w: Permutation) -> bool:
    P, _ = max_pipedream(w)
    target = (rajcode(w), rajcode_inv(w))
    hits = [Q for Q in enumerate_pd(w) if (row_weight(Q.crosses), col_weight(Q.crosses)) == target]
    return len(hits) == 1 and hits[0] == P


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    check: Callable[[Permutation], bool]
    max_n: int = COMBINATORIAL_MAX_N


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("thm1.1", "top-degree leading monomial of the double polynomial is x^rajcode(w) y^rajcode(w^-1), |coeff| = 1",
              _top_degree_leading, POLY_MAX_N),
        Claim("degrees", "single polynomial spans degrees |invcode|..|rajcode| with per-degree leading terms IR(w)",
              _degree_range_and_leading_terms, POLY_MAX_N),
        Claim("thm1.2", "maximal pipedream has row weight rajcode(w), column weight rajcode(w^-1)", _maximal_weights),
        Claim("thm1.4", "reg(w) K-moves whose row weights are IR(w)", _k_events_follow_ir),
        Claim("prop3.2", "recursive rajcode and inverse rajcode; reg grows by d_a(u)", _rajcode_recursions),
        Claim("recursions", "recursive Rothe diagram and dark clouds", _diagram_recursions),
        Claim("prop3.4", "recursive IR sequence", _ir_recursion),
        Claim("prop4.3", "column identity linking rajcode(w^-1), movecode and d_c", _column_identity),
        Claim("prop4.4", "last sweep moves movecode(u)_c cells in column c > a, none otherwise", _last_iteration_counts),
        Claim("cor4.6", "each productive sweep adds exactly one cell to the bar row", _unit_increment),
        Claim("cor5.21", "every sweep of the algorithm acts initially", _acts_initially_everywhere),
        Claim("lem5.1", "recursive movecode", _movecode_recursion),
        Claim("lem5.6", "moved cells chain upward: r_j lands in row r_{j-1}", _moves_chain_upward),
        Claim("lem5.8", "destinations lie in the initial segment of the next column", _destinations_in_segment),
        Claim("lem5.9", "moved cells are exactly the initial-segment cells with empty right neighbour",
              _moved_cells_characterized),
        Claim("claim1", "paired sweeps on the twice-shifted maximal pipedream", _paired_sweeps),
        Claim("claim2", "row-1 sweeps on the once-shifted maximal pipedream act initially", _top_row_sweeps_initial),
        Claim("oracle-pd", "ladder closure = traced subsets = Demazure subsets", _ladder_closure_matches_oracles, POLY_MAX_N),
        Claim("uniqueness", "exactly one pipedream carries the rajcode weight pair, and it is the constructed one",
              _unique_maximal),
    ]
}


@dataclass
class CheckResult:
    claim: str
    population: int
    failures: list[Permutation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "passed": self.passed,
            "checks": [
                {
                    "claim": c.claim,
                    "population": c.population,
                    "passed": c.passed,
                    "failures": [list(w.one_line) for w in c.failures],
                }
                for c in self.checks
            ],
        }
        if timing:
            for entry, c in zip(out["checks"], self.checks):
                entry["elapsed"] = c.elapsed
        return out

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.claim} n={self.n} checked={c.population}"
            if c.failures:
                line += " counterexamples=" + " ".join(str(w) for w in c.failures[:10])
            lines.append(line)
        return "\n".join(lines)


def _resolve(claims: Iterable[str] | None) -> list[Claim]:
    if claims is None:
        return list(CLAIMS.values())
    out = []
    for cid in claims:
        if cid not in CLAIMS:
            raise UnknownClaim(cid)
        out.append(CLAIMS[cid])
    return out


def verify(
    n: int,
    claims: Iterable[str] | None = None,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> VerificationReport:
    """Run every selected claim over all of S_n; failures are sorted by one-line notation."""
    selected = _resolve(claims)
    for claim in selected:
        check_size(n, claim.max_n, f"claim {claim.id}")
    population = list(permutations(n)) if n >= 1 else []
    report = VerificationReport(n)
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for claim in selected:
            start = time.perf_counter()
            if pool is None:
                verdicts = [claim.check(w) for w in population]
            else:
                verdicts = list(pool.map(claim.check, population, chunksize=max(1, len(population) // (4 * jobs))))
            failures = sorted(w for w, ok in zip(population, verdicts) if not ok)
            result = CheckResult(claim.id, len(population), failures, time.perf_counter() - start)
            report.checks.append(result)
            if progress:
                progress(f"{claim.id} n={n}: {'ok' if result.passed else 'FAILED'} ({result.elapsed:.2f}s)")
    finally:
        if pool is not None:
            pool.shutdown()
    return report
