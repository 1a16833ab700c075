"""Structural analysis of strategies.

Each question gets an *occurrence profile* (f1, f2, f3): how often its color
on each peg appears on that peg across the whole strategy.  Profiles map to
type letters:

    A = (1,2,2)   B = (2,1,2)   C = (2,2,1)
    D = (2,1,1)   E = (1,2,1)   F = (1,1,2)

and anything else is ``Other``.  For a type in {A, B, C} the peg occurring
once is its *single peg*, the other two are its *double pegs*.

Two questions are *neighboring* when they agree on exactly one peg and
*double-neighboring* when they agree on exactly two.  The *strategy graph*
has the questions as vertices and (double-)neighboring pairs as edges of
multiplicity 1 (2); its connected components are *blocks*.

For strategies whose questions are all of type A/B/C, twelve forbidden
patterns decide feasibility one way ("no pattern" certifies feasible) and
eleven of them also the other way (each detected pattern except pattern 2
certifies infeasible).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .core import Question, Strategy

Profile = Tuple[int, int, int]

TYPE_BY_PROFILE: Dict[Profile, str] = {
    (1, 2, 2): "A", (2, 1, 2): "B", (2, 2, 1): "C",
    (2, 1, 1): "D", (1, 2, 1): "E", (1, 1, 2): "F",
}
#: peg index (0-based) whose color occurs once, per type letter
SINGLE_PEG: Dict[str, int] = {"A": 0, "B": 1, "C": 2}
#: the two peg indices whose colors occur twice, per type letter
DOUBLE_PEGS: Dict[str, Tuple[int, int]] = {"A": (1, 2), "B": (0, 2), "C": (0, 1)}


def classify_questions(strat: Strategy) -> List[Tuple[Profile, str]]:
    """Occurrence profile and type letter for every question, in order."""
    counts = [Counter(q[peg] for q in strat.questions) for peg in range(3)]
    out = []
    for q in strat.questions:
        prof = (counts[0][q[0]], counts[1][q[1]], counts[2][q[2]])
        out.append((prof, TYPE_BY_PROFILE.get(prof, "Other")))
    return out


def question_types(strat: Strategy) -> List[str]:
    return [t for _, t in classify_questions(strat)]


def missing_colors(strat: Strategy) -> Tuple[Set[int], Set[int], Set[int]]:
    """Per peg, the in-range colors never used by any question."""
    used = [set(q[peg] for q in strat.questions) for peg in range(3)]
    dims = strat.params.astuple()
    return tuple(set(range(1, dims[peg] + 1)) - used[peg] for peg in range(3))  # type: ignore[return-value]


def agreement_count(u: Question, v: Question) -> int:
    return (u[0] == v[0]) + (u[1] == v[1]) + (u[2] == v[2])


@dataclass(frozen=True)
class Block:
    vertices: Tuple[int, ...]          # question indices, sorted
    kind: str                          # "path" | "cycle" | "other"


@dataclass(frozen=True)
class StrategyGraph:
    """Multigraph on question indices.

    ``edges`` maps each unordered index pair (i < j) to multiplicity 1
    (neighboring) or 2 (double-neighboring).  A double-neighboring pair is a
    2-cycle, so a lone such pair classifies as a cycle block.
    """

    n: int
    edges: Dict[Tuple[int, int], int]
    blocks: Tuple[Block, ...]

    def multiplicity(self, i: int, j: int) -> int:
        return self.edges.get((min(i, j), max(i, j)), 0)

    def degree(self, i: int) -> int:
        return sum(m for (u, v), m in self.edges.items() if i in (u, v))


def build_strategy_graph(strat: Strategy) -> StrategyGraph:
    n = len(strat.questions)
    edges: Dict[Tuple[int, int], int] = {}
    for i, j in itertools.combinations(range(n), 2):
        m = agreement_count(strat.questions[i], strat.questions[j])
        if m in (1, 2):
            edges[(i, j)] = m
    # connected components via union of edge endpoints
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j) in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    comps: Dict[int, List[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    degree = {v: 0 for v in range(n)}
    for (i, j), m in edges.items():
        degree[i] += m
        degree[j] += m
    blocks = []
    for comp in sorted(comps.values()):
        degs = [degree[v] for v in comp]
        if degs and all(d == 2 for d in degs):
            kind = "cycle"
        elif sum(1 for d in degs if d == 1) == 2 and all(d in (1, 2) for d in degs):
            kind = "path"
        elif len(comp) == 1:
            kind = "path"                      # isolated vertex: trivial path
        else:
            kind = "other"
        blocks.append(Block(tuple(sorted(comp)), kind))
    return StrategyGraph(n, edges, tuple(blocks))


# ---------------------------------------------------------------------------
# Forbidden patterns (ABC-only strategies)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PatternHit:
    pattern: int
    indices: Tuple[int, ...]           # witnessing question indices, sorted
    note: str = ""


@dataclass(frozen=True)
class PatternReport:
    applicable: bool                   # all questions of type A/B/C
    hits: Tuple[PatternHit, ...] = ()

    def hit_ids(self) -> Set[int]:
        return {h.pattern for h in self.hits}


def _neighbor_adjacency(n: int, edges: Dict[Tuple[int, int], int]) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(n)]
    for (i, j), m in edges.items():
        if m == 1:
            adj[i].append(j)
            adj[j].append(i)
    return adj


def _sequences(word: str, ty: Sequence[str], adj: List[List[int]]) -> Iterator[Tuple[int, ...]]:
    """All arrangements of distinct questions realizing the type word with
    consecutive questions neighboring.  Each undirected arrangement is
    yielded once (the reversal is suppressed)."""
    k = len(word)
    n = len(ty)

    def extend(path: List[int]) -> Iterator[Tuple[int, ...]]:
        if len(path) == k:
            if path[0] <= path[-1]:
                yield tuple(path)
            return
        for nxt in adj[path[-1]]:
            if ty[nxt] == word[len(path)] and nxt not in path:
                path.append(nxt)
                yield from extend(path)
                path.pop()

    for start in range(n):
        if ty[start] == word[0]:
            yield from extend([start])


def detect_patterns(strat: Strategy) -> PatternReport:
    """Search for the twelve forbidden patterns.

    Only meaningful for ABC-only strategies; otherwise the report is marked
    not applicable and carries no hits.  Sequence membership is broad:
    overlapping-but-unequal structures count as different, and the paired
    structures of patterns 4 and 8 may overlap the sequence.
    """
    ty = question_types(strat)
    if any(t not in ("A", "B", "C") for t in ty):
        return PatternReport(False)
    n = len(strat.questions)
    miss = missing_colors(strat)
    graph = build_strategy_graph(strat)
    adj = _neighbor_adjacency(n, graph.edges)
    dpairs = sorted((i, j) for (i, j), m in graph.edges.items() if m == 2)

    def first_seq(word: str) -> Optional[Tuple[int, ...]]:
        return next(_sequences(word, ty, adj), None)

    def typed_dpairs(letter: str) -> List[Tuple[int, int]]:
        return [(i, j) for i, j in dpairs if ty[i] == letter and ty[j] == letter]

    hits: List[PatternHit] = []

    # 1: two missing colors on one peg
    for peg in range(3):
        if len(miss[peg]) >= 2:
            hits.append(PatternHit(1, (), f"peg {peg + 1} misses colors {sorted(miss[peg])}"))
            break
    # 2: a missing color on every peg
    if all(miss[peg] for peg in range(3)):
        hits.append(PatternHit(2, (), "every peg has a missing color"))
    # 3: TTT sequence with missing colors on both double pegs of T
    for T in "ABC":
        d1, d2 = DOUBLE_PEGS[T]
        if miss[d1] and miss[d2]:
            seq = first_seq(T * 3)
            if seq:
                hits.append(PatternHit(3, tuple(sorted(seq)), f"{T}{T}{T} sequence"))
                break
    # 4: TTT sequence plus a double-neighboring same-type pair
    for T in "ABC":
        pairs = typed_dpairs(T)
        if not pairs:
            continue
        seq = first_seq(T * 3)
        if seq:
            hits.append(PatternHit(4, tuple(sorted(set(seq) | set(pairs[0]))),
                                   f"{T}{T}{T} sequence plus double-neighboring {T}{T}"))
            break
    # 5: T1T1T2T2 sequence with a missing color on the shared double peg
    for T1, T2 in itertools.permutations("ABC", 2):
        peg = (set(DOUBLE_PEGS[T1]) & set(DOUBLE_PEGS[T2])).pop()
        if miss[peg]:
            seq = first_seq(T1 * 2 + T2 * 2)
            if seq:
                hits.append(PatternHit(5, tuple(sorted(seq)), f"{T1}{T1}{T2}{T2} sequence"))
                break
    # 6: T1T1T2T3T3 sequence over three distinct types
    for T1, T2, T3 in itertools.permutations("ABC"):
        seq = first_seq(T1 + T1 + T2 + T3 + T3)
        if seq:
            hits.append(PatternHit(6, tuple(sorted(seq)), f"{T1}{T1}{T2}{T3}{T3} sequence"))
            break
    # 7: two different sequences of the same mixed type pair
    for T1, T2 in itertools.combinations("ABC", 2):
        found = sorted((i, j) for (i, j), m in graph.edges.items()
                       if m == 1 and {ty[i], ty[j]} == {T1, T2})
        if len(found) >= 2:
            hits.append(PatternHit(7, tuple(sorted(set(found[0]) | set(found[1]))),
                                   f"two {T1}{T2} sequences"))
            break
    # 8: mixed T1T2 sequence + double-neighboring T2T2 + missing color on T2's single peg
    done8 = False
    for T2 in "ABC":
        if done8 or not miss[SINGLE_PEG[T2]]:
            continue
        pairs = typed_dpairs(T2)
        if not pairs:
            continue
        for T1 in "ABC":
            if T1 == T2:
                continue
            mixed = sorted((i, j) for (i, j), m in graph.edges.items()
                           if m == 1 and {ty[i], ty[j]} == {T1, T2})
            if mixed:
                hits.append(PatternHit(8, tuple(sorted(set(mixed[0]) | set(pairs[0]))),
                                       f"{T1}{T2} sequence plus double-neighboring {T2}{T2}"))
                done8 = True
                break
    # 9: double-neighboring TT with missing colors on both double pegs of T
    for i, j in dpairs:
        if ty[i] == ty[j]:
            d1, d2 = DOUBLE_PEGS[ty[i]]
            if miss[d1] and miss[d2]:
                hits.append(PatternHit(9, (i, j), f"double-neighboring {ty[i]}{ty[i]}"))
                break
    # 10: two different double-neighboring pairs of the same type
    for T in "ABC":
        pairs = typed_dpairs(T)
        if len(pairs) >= 2:
            hits.append(PatternHit(10, tuple(sorted(set(pairs[0]) | set(pairs[1]))),
                                   f"two double-neighboring {T}{T} pairs"))
            break
    # 11: double-neighboring T1T1 and T2T2 with missing colors on both single pegs
    for T1, T2 in itertools.combinations("ABC", 2):
        if not (miss[SINGLE_PEG[T1]] and miss[SINGLE_PEG[T2]]):
            continue
        p1, p2 = typed_dpairs(T1), typed_dpairs(T2)
        if p1 and p2:
            hits.append(PatternHit(11, tuple(sorted(set(p1[0]) | set(p2[0]))),
                                   f"double-neighboring {T1}{T1} and {T2}{T2}"))
            break
    # 12: double-neighboring AA, BB and CC all present
    reps = {}
    for i, j in dpairs:
        if ty[i] == ty[j] and ty[i] not in reps:
            reps[ty[i]] = (i, j)
    if len(reps) == 3:
        idx = sorted(set(itertools.chain.from_iterable(reps.values())))
        hits.append(PatternHit(12, tuple(idx), "double-neighboring AA, BB and CC"))

    hits.sort(key=lambda h: h.pattern)
    return PatternReport(True, tuple(hits))


# ---------------------------------------------------------------------------
# Feasibility certificate
# ---------------------------------------------------------------------------

CERTIFIED_FEASIBLE = "CertifiedFeasible"
CERTIFIED_INFEASIBLE = "CertifiedInfeasible"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Certificate:
    status: str                        # one of the three constants above
    pattern: Optional[int] = None      # set only for CertifiedInfeasible

    def __str__(self) -> str:
        if self.status == CERTIFIED_INFEASIBLE:
            return f"{self.status}(pattern {self.pattern})"
        return self.status


def certify_feasible(strat: Strategy) -> Certificate:
    """One-sided feasibility certificate from the pattern detector.

    No pattern on an ABC-only strategy certifies feasibility; any pattern
    other than 2 certifies infeasibility; pattern 2 alone, or a strategy
    with D/E/F/Other questions, is inconclusive.
    """
    report = detect_patterns(strat)
    if not report.applicable:
        return Certificate(UNKNOWN)
    ids = sorted(report.hit_ids())
    if not ids:
        return Certificate(CERTIFIED_FEASIBLE)
    decisive = [p for p in ids if p != 2]
    if decisive:
        return Certificate(CERTIFIED_INFEASIBLE, decisive[0])
    return Certificate(UNKNOWN)


# ---------------------------------------------------------------------------
# Structural filters: necessary conditions for feasibility (any strategy)
# ---------------------------------------------------------------------------

def _profile_matches(prof: Profile, shape: Tuple[Optional[int], Optional[int], Optional[int]]) -> bool:
    return all(want is None or got == want for got, want in zip(prof, shape))


def check_structural_filters(strat: Strategy) -> List[str]:
    """Evaluate necessary-condition clauses (a)-(g); return violated labels.

    Every feasible strategy satisfies all clauses, so any violation proves
    infeasibility; the converse does not hold.  Shapes like (1,1,*) refer to
    occurrence profiles with a wildcard third component.
    """
    profs = [p for p, _ in classify_questions(strat)]
    miss = missing_colors(strat)
    n = len(strat.questions)
    violated: List[str] = []

    def shaped(shape: Tuple[Optional[int], Optional[int], Optional[int]]) -> List[int]:
        return [k for k, p in enumerate(profs) if _profile_matches(p, shape)]

    ones_12 = shaped((1, 1, None))
    ones_13 = shaped((1, None, 1))
    ones_23 = shaped((None, 1, 1))

    # (a) at most one missing color per peg
    if any(len(m) >= 2 for m in miss):
        violated.append("a")
    # (b) at most one question of each shape (1,1,*), (1,*,1), (*,1,1)
    if len(ones_12) >= 2 or len(ones_13) >= 2 or len(ones_23) >= 2:
        violated.append("b")
    # (c) no three distinct questions covering all three shapes at once
    found_c = False
    for i in ones_12:
        for j in ones_13:
            for k in ones_23:
                if i != j and i != k and j != k:
                    found_c = True
    if found_c:
        violated.append("c")
    # (d) two pegs with missing colors forbid the shape "single on both"
    if (miss[0] and miss[1] and ones_12) or (miss[0] and miss[2] and ones_13) \
            or (miss[1] and miss[2] and ones_23):
        violated.append("d")
    # (e) two pegs with missing colors forbid the *pair* of the two other shapes
    if (miss[0] and miss[1] and ones_13 and ones_23) \
            or (miss[0] and miss[2] and ones_12 and ones_23) \
            or (miss[1] and miss[2] and ones_12 and ones_13):
        violated.append("e")

    # (f)/(g) need the double-neighboring structure
    graph = build_strategy_graph(strat)
    dpairs = [(i, j) for (i, j), m in graph.edges.items() if m == 2]

    def full(peg: int) -> bool:
        return not miss[peg]

    # (f) premise: two double-neighboring questions whose shared profile is the
    #     type-letter profile with the single peg s; conclusion: no question is
    #     single on the two double pegs, and one double peg uses all colors.
    f_rules = [
        ((2, 2, 1), ones_12, (0, 1)),   # pair of (2,2,1)s: no (1,1,*), peg1 or peg2 full
        ((2, 1, 2), ones_13, (0, 2)),
        ((1, 2, 2), ones_23, (1, 2)),
    ]
    for prof_shape, forbidden, pegs in f_rules:
        pair_exists = any(profs[i] == prof_shape and profs[j] == prof_shape
                          for i, j in dpairs)
        if pair_exists and (forbidden or not (full(pegs[0]) or full(pegs[1]))):
            violated.append("f")
            break

    # (g) premise: a (2,2,1)-question with a (2,*,1)-question neighboring it on
    #     peg 1 and a (*,2,1)-question neighboring it on peg 2 (plus the two
    #     symmetric versions); conclusion as in (f).  "Neighboring on peg p"
    #     means exactly one agreement, located on peg p, which also forces the
    #     two mates to be distinct questions.
    def neighbors_on(qi: int, shape: Tuple[Optional[int], Optional[int], Optional[int]],
                     peg: int) -> bool:
        base = strat.questions[qi]
        for r in range(n):
            if r == qi or not _profile_matches(profs[r], shape):
                continue
            other = strat.questions[r]
            if other[peg] == base[peg] and agreement_count(other, base) == 1:
                return True
        return False

    g_rules = [
        # base profile, (mate shape, agreeing peg) x2, forbidden shape, full pegs
        ((2, 2, 1), ((2, None, 1), 0), ((None, 2, 1), 1), ones_12, (0, 1)),
        ((2, 1, 2), ((None, 1, 2), 2), ((2, 1, None), 0), ones_13, (0, 2)),
        ((1, 2, 2), ((1, None, 2), 2), ((1, 2, None), 1), ones_23, (1, 2)),
    ]
    for base_shape, (sh1, peg1), (sh2, peg2), forbidden, pegs in g_rules:
        premise = any(profs[qi] == base_shape
                      and neighbors_on(qi, sh1, peg1)
                      and neighbors_on(qi, sh2, peg2)
                      for qi in range(n))
        if premise and (forbidden or not (full(pegs[0]) or full(pegs[1]))):
            violated.append("g")
            break

    return violated
