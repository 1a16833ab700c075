"""Exhaustive search for small feasible strategies.

``exists_feasible`` decides whether some feasible strategy of a given size
exists, by depth-first search over question sets in increasing lexicographic
order.  Completeness is kept while the tree is cut down by:

* color symmetry — any feasible strategy can be relabeled so that it
  contains (1,1,1), so the first question is fixed;
* canonical deduplication of the two-question prefixes (question order,
  per-peg relabeling, and same-range peg swaps give equivalent prefixes
  equal keys, and only the first of each key is expanded);
* an information bound — a signature class of m secrets needs at least
  ceil(log4 m) more questions to split, since one answer has four values;
* a color-coverage bound — a peg with two or more unused colors at the end
  is always infeasible, and each question covers at most one new color
  per peg.

The search runs as one independent subtree per surviving second question.
Subtrees are examined in enumeration order and node counts are summed over
the subtrees up to and including the winning one, so the reported
``nodes_explored`` does not depend on the thread count.

``min_feasible_size`` deepens the size from the general lower bound and
stops at the constructive upper bound, where ``construct`` already provides
a witness without searching.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import lower_bound, upper_bound
from .constructors import construct
from .core import Params, Question, Strategy, match_count

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget"


@dataclass(frozen=True)
class Budget:
    """Wall-clock and node allowances; None disables a limit."""

    time_limit: Optional[float] = 60.0
    node_limit: Optional[int] = 100_000_000


@dataclass(frozen=True)
class SearchOutcome:
    status: str                      # "found" | "exhausted" | "budget"
    size: int                        # the strategy size searched for
    witness: Optional[Strategy]      # present iff status == "found"
    nodes_explored: int
    elapsed: float


class _OutOfBudget(Exception):
    pass


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _min_matrix(questions: Sequence[Question]) -> Tuple[Question, ...]:
    """Lexicographically smallest relabeled question matrix over all question
    orders, where each peg's colors are renamed 1,2,... by first occurrence."""
    n = len(questions)
    if n == 0:
        return ()
    best: Optional[List[Question]] = None

    def rec(remaining: List[int], maps: List[Dict[int, int]],
            out: List[Question]) -> None:
        nonlocal best
        if best is not None and out > best[:len(out)]:
            return
        if not remaining:
            if best is None or out < best:
                best = list(out)
            return
        rows = {}
        for idx in remaining:
            q = questions[idx]
            rows[idx] = tuple(maps[p].get(q[p], len(maps[p]) + 1) for p in range(3))
        target = min(rows.values())
        for idx in remaining:
            if rows[idx] != target:
                continue
            q = questions[idx]
            new_maps = []
            for p in range(3):
                mp = maps[p]
                if q[p] not in mp:
                    mp = dict(mp)
                    mp[q[p]] = len(mp) + 1
                new_maps.append(mp)
            out.append(target)
            rec([i for i in remaining if i != idx], new_maps, out)
            out.pop()

    rec(list(range(n)), [{}, {}, {}], [])
    return tuple(best)


def canonical_key(strat: Strategy) -> Tuple[Tuple[int, int, int], Tuple[Question, ...]]:
    """Invariant of a strategy under question reordering, per-peg color
    relabeling, and swaps of pegs with equal color counts."""
    dims = strat.params.astuple()
    order = sorted(range(3), key=lambda i: (dims[i], i))
    sorted_dims = tuple(dims[i] for i in order)
    base = [tuple(q[i] for i in order) for q in strat.questions]
    best = None
    for perm in itertools.permutations(range(3)):
        if tuple(sorted_dims[p] for p in perm) != sorted_dims:
            continue
        mat = _min_matrix([tuple(q[p] for p in perm) for q in base])
        if best is None or mat < best:
            best = mat
    return sorted_dims, best


# ---------------------------------------------------------------------------
# Depth-first existence search
# ---------------------------------------------------------------------------

def _log4_ceil(m: int) -> int:
    t = 0
    while (1 << (2 * t)) < m:
        t += 1
    return t


class _Search:
    """One subtree of the existence search, with its own node allowance."""

    def __init__(self, dims: Tuple[int, int, int], triples: List[Question],
                 k: int, deadline: Optional[float], node_limit: Optional[int],
                 match_rows: Dict[int, bytes]):
        self.dims = dims
        self.triples = triples
        self.n = len(triples)
        self.k = k
        self.deadline = deadline
        self.node_limit = node_limit
        self.match_rows = match_rows
        self.nodes = 0
        self.chosen: List[int] = []
        self.used = [dict() for _ in range(3)]       # color -> multiplicity
        self.missing = list(dims)                    # unused colors per peg

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and (self.nodes & 1023) == 0 \
                and time.perf_counter() > self.deadline:
            raise _OutOfBudget

    def _row(self, j: int) -> bytes:
        row = self.match_rows.get(j)
        if row is None:
            q = self.triples[j]
            row = bytes(bytearray(match_count(s, q) for s in self.triples))
            self.match_rows[j] = row
        return row

    def _use(self, j: int) -> None:
        q = self.triples[j]
        for p in range(3):
            cnt = self.used[p].get(q[p], 0)
            if cnt == 0:
                self.missing[p] -= 1
            self.used[p][q[p]] = cnt + 1

    def _unuse(self, j: int) -> None:
        q = self.triples[j]
        for p in range(3):
            cnt = self.used[p][q[p]] - 1
            self.used[p][q[p]] = cnt
            if cnt == 0:
                self.missing[p] += 1

    def _capacity_ok(self, slots_left: int) -> bool:
        return all(m - slots_left <= 1 for m in self.missing)

    def _refine(self, j: int, classes: List[List[int]],
                slots_left: int) -> Optional[List[List[int]]]:
        """Split signature classes on question j; None when the largest
        class cannot be separated within the remaining slots."""
        row = self._row(j)
        out: List[List[int]] = []
        biggest = 1
        for cls in classes:
            buckets: Dict[int, List[int]] = {}
            for s in cls:
                buckets.setdefault(row[s], []).append(s)
            for part in buckets.values():
                if len(part) >= 2:
                    out.append(part)
                    if len(part) > biggest:
                        biggest = len(part)
        if _log4_ceil(biggest) > slots_left:
            return None
        return out

    def _pad(self) -> List[int]:
        """Extend the chosen set to exactly k questions; adding questions
        never breaks feasibility."""
        witness = list(self.chosen)
        have = set(witness)
        j = 0
        while len(witness) < self.k:
            if j not in have:
                witness.append(j)
            j += 1
        return sorted(witness)

    def _dfs(self, depth: int, last: int, classes: List[List[int]]) -> Optional[List[int]]:
        if not classes:
            return self._pad()
        if depth == self.k:
            return None
        slots = self.k - depth
        for j in range(last + 1, self.n - slots + 1):
            self._tick()
            self._use(j)
            if not self._capacity_ok(slots - 1):
                self._unuse(j)
                continue
            refined = self._refine(j, classes, slots - 1)
            if refined is None:
                self._unuse(j)
                continue
            self.chosen.append(j)
            res = self._dfs(depth + 1, j, refined)
            if res is not None:
                return res
            self.chosen.pop()
            self._unuse(j)
        return None

    def run_branch(self, j: int, root_classes: List[List[int]]
                   ) -> Tuple[str, Optional[List[int]], int]:
        """Search completions of the prefix [(1,1,1), triples[j]]."""
        self.chosen = [0, j]
        self._use(0)
        self._use(j)
        slots = self.k - 2
        if not self._capacity_ok(slots):
            return EXHAUSTED, None, self.nodes
        refined = self._refine(j, root_classes, slots)
        if refined is None:
            return EXHAUSTED, None, self.nodes
        try:
            res = self._dfs(2, j, refined)
        except _OutOfBudget:
            return BUDGET, None, self.nodes
        return (FOUND, res, self.nodes) if res is not None else (EXHAUSTED, None, self.nodes)


def exists_feasible(params: Params, size: int, budget: Optional[Budget] = None,
                    threads: int = 1) -> SearchOutcome:
    """Decide whether a feasible strategy with exactly ``size`` questions
    exists, returning a witness when one is found."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    budget = budget if budget is not None else Budget()
    t0 = time.perf_counter()
    deadline = t0 + budget.time_limit if budget.time_limit is not None else None
    a, b, c = params.astuple()
    n = a * b * c
    triples: List[Question] = [(x, y, z)
                               for x in range(1, a + 1)
                               for y in range(1, b + 1)
                               for z in range(1, c + 1)]

    def done(status: str, witness_idx: Optional[List[int]], nodes: int) -> SearchOutcome:
        witness = None
        if witness_idx is not None:
            witness = Strategy(params, tuple(triples[i] for i in witness_idx))
        return SearchOutcome(status, size, witness, nodes, time.perf_counter() - t0)

    if n == 1:
        # a single secret is distinguished by any set of distinct questions
        return done(FOUND if size <= 1 else EXHAUSTED,
                    list(range(size)) if size <= 1 else None, 0)
    if size == 0 or size > n:
        return done(EXHAUSTED, None, 0)

    match_rows: Dict[int, bytes] = {}
    probe = _Search((a, b, c), triples, size, deadline, None, match_rows)
    root_classes = probe._refine(0, [list(range(n))], size - 1)
    setup_nodes = 1                                  # the forced (1,1,1)
    if root_classes is None:
        return done(EXHAUSTED, None, setup_nodes)
    if size == 1:
        return done(FOUND if not root_classes else EXHAUSTED,
                    [0] if not root_classes else None, setup_nodes)

    # enumerate second questions, deduplicating equivalent prefixes
    branches: List[int] = []
    seen = set()
    for j in range(1, n - size + 2):
        setup_nodes += 1
        key = canonical_key(Strategy(params, (triples[0], triples[j])))
        if key in seen:
            continue
        seen.add(key)
        branches.append(j)
    if not branches:
        return done(EXHAUSTED, None, setup_nodes)
    per_branch = None
    if budget.node_limit is not None:
        per_branch = max(1, budget.node_limit // len(branches))

    def run(j: int) -> Tuple[str, Optional[List[int]], int]:
        sub = _Search((a, b, c), triples, size, deadline, per_branch, match_rows)
        return sub.run_branch(j, root_classes)

    total = setup_nodes
    saw_budget = False
    if threads == 1:
        for j in branches:
            status, wit, nodes = run(j)
            total += nodes
            if status == FOUND:
                return done(FOUND, wit, total)
            if status == BUDGET:
                saw_budget = True
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run, j) for j in branches]
            for fut in futures:
                status, wit, nodes = fut.result()
                total += nodes
                if status == FOUND:
                    for other in futures:
                        other.cancel()
                    return done(FOUND, wit, total)
                if status == BUDGET:
                    saw_budget = True
    return done(BUDGET if saw_budget else EXHAUSTED, None, total)


def min_feasible_size(params: Params, budget: Optional[Budget] = None,
                      threads: int = 1) -> SearchOutcome:
    """Smallest feasible strategy size, by deepening from the general lower
    bound; the constructive upper bound supplies the final witness, so the
    search always terminates there.

    On budget exhaustion the outcome's size is the last size whose
    enumeration fully completed (lower bound minus one when even the first
    size was interrupted)."""
    budget = budget if budget is not None else Budget()
    t0 = time.perf_counter()
    deadline = t0 + budget.time_limit if budget.time_limit is not None else None
    lo, _ = lower_bound(params)
    up, _ = upper_bound(params)
    total_nodes = 0
    exhausted_up_to = lo - 1
    for k in range(lo, up):
        time_left = None
        if deadline is not None:
            time_left = deadline - time.perf_counter()
            if time_left <= 0:
                return SearchOutcome(BUDGET, exhausted_up_to, None, total_nodes,
                                     time.perf_counter() - t0)
        nodes_left = None
        if budget.node_limit is not None:
            nodes_left = budget.node_limit - total_nodes
            if nodes_left <= 0:
                return SearchOutcome(BUDGET, exhausted_up_to, None, total_nodes,
                                     time.perf_counter() - t0)
        out = exists_feasible(params, k, Budget(time_left, nodes_left), threads)
        total_nodes += out.nodes_explored
        if out.status == FOUND:
            return SearchOutcome(FOUND, k, out.witness, total_nodes,
                                 time.perf_counter() - t0)
        if out.status == BUDGET:
            return SearchOutcome(BUDGET, exhausted_up_to, None, total_nodes,
                                 time.perf_counter() - t0)
        exhausted_up_to = k
    witness = construct(params)
    return SearchOutcome(FOUND, up, witness, total_nodes,
                         time.perf_counter() - t0)
