"""Game semantics for static black-peg three-peg Mastermind.

A *question* and a *secret* are both triples of 1-based colors, one per peg.
Asking question ``q`` against secret ``s`` earns one black peg per position
where the colors agree.  A set of questions (a *strategy*) is feasible when
the vector of black-peg counts — the *signature* — is different for every
possible secret, i.e. the answers to the whole set pin the secret down
uniquely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Question = Tuple[int, int, int]
Signature = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Params:
    """Color counts (a, b, c) for pegs 1, 2, 3."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"color counts must be >= 1, got {self.astuple()}")

    def astuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def is_canonical(self) -> bool:
        return self.a <= self.b <= self.c

    def canonicalize(self) -> Tuple["Params", Tuple[int, int, int]]:
        """Sort pegs ascending.

        Returns the sorted params and the permutation ``perm`` such that
        canonical peg ``i`` is original peg ``perm[i]`` (0-based).  Ties keep
        the original order, so canonical input returns the identity.
        """
        order = tuple(sorted(range(3), key=lambda i: (self.astuple()[i], i)))
        vals = self.astuple()
        return Params(*(vals[i] for i in order)), order

    def secret_count(self) -> int:
        return self.a * self.b * self.c


def permute_question(q: Question, perm: Sequence[int]) -> Question:
    """Reorder coordinates so new peg i holds old peg perm[i]."""
    return (q[perm[0]], q[perm[1]], q[perm[2]])


def invert_permutation(perm: Sequence[int]) -> Tuple[int, int, int]:
    inv = [0, 0, 0]
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)  # type: ignore[return-value]


@dataclass(frozen=True)
class Strategy:
    """An ordered list of pairwise-distinct questions for fixed params.

    Order matters only for presentation (signatures list counts in strategy
    order); feasibility is a property of the underlying set.
    """

    params: Params
    questions: Tuple[Question, ...]

    def __post_init__(self) -> None:
        a, b, c = self.params.astuple()
        seen = set()
        for k, q in enumerate(self.questions):
            if len(q) != 3:
                raise ValueError(f"question {k} is not a triple: {q!r}")
            if not (1 <= q[0] <= a and 1 <= q[1] <= b and 1 <= q[2] <= c):
                raise ValueError(
                    f"question {k} = {q} out of range for (a,b,c)={self.params.astuple()}")
            if q in seen:
                raise ValueError(f"duplicate question {q} at index {k}")
            seen.add(q)

    def __len__(self) -> int:
        return len(self.questions)

    def __iter__(self) -> Iterator[Question]:
        return iter(self.questions)


def strategy(a: int, b: int, c: int, questions: Iterable[Sequence[int]]) -> Strategy:
    """Convenience constructor from plain ints and any iterable of triples."""
    return Strategy(Params(a, b, c), tuple(tuple(q) for q in questions))  # type: ignore[arg-type]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[Tuple[Question, Question]] = None

    def __post_init__(self) -> None:
        if self.feasible and self.witness is not None:
            raise ValueError("feasible result cannot carry a witness")
        if not self.feasible and self.witness is None:
            raise ValueError("infeasible result requires a witness pair")


def match_count(s: Question, q: Question) -> int:
    """Black pegs earned by question q against secret s: agreeing positions."""
    return (s[0] == q[0]) + (s[1] == q[1]) + (s[2] == q[2])


def all_secrets(params: Params) -> Iterator[Question]:
    """All a*b*c secrets in lexicographic order."""
    return itertools.product(range(1, params.a + 1),
                             range(1, params.b + 1),
                             range(1, params.c + 1))


def signature(strat: Strategy, secret: Question) -> Signature:
    """Per-question black-peg counts for one secret, in strategy order."""
    a, b, c = strat.params.astuple()
    if not (1 <= secret[0] <= a and 1 <= secret[1] <= b and 1 <= secret[2] <= c):
        raise ValueError(f"secret {secret} out of range for (a,b,c)={(a, b, c)}")
    return tuple(match_count(secret, q) for q in strat.questions)


def verify_feasible(strat: Strategy) -> FeasibilityResult:
    """Decide feasibility by hashing signatures over all secrets.

    Infeasible results carry the lexicographically smallest colliding pair
    of secrets (pair ordered, pairs compared as sorted 2-tuples), so output
    is deterministic.
    """
    buckets: dict = {}
    colliding: list = []
    for s in all_secrets(strat.params):
        sig = signature(strat, s)
        prev = buckets.get(sig)
        if prev is None:
            buckets[sig] = s
        else:
            colliding.append(sig)
            # keep the representative; full bucket re-scan happens below
    if not colliding:
        return FeasibilityResult(True)
    collide_set = set(colliding)
    groups: dict = {sig: [] for sig in collide_set}
    for s in all_secrets(strat.params):
        sig = signature(strat, s)
        if sig in groups:
            groups[sig].append(s)
    best: Optional[Tuple[Question, Question]] = None
    for group in groups.values():
        for pair in itertools.combinations(group, 2):
            if best is None or pair < best:
                best = pair
    assert best is not None
    return FeasibilityResult(False, best)


# ---------------------------------------------------------------------------
# Strategy text format
#
# line 1:            "a b c"
# following lines:   "q1 q2 q3"     (one question per line)
# '#' starts a comment; blank lines are ignored.
# ---------------------------------------------------------------------------

class StrategyParseError(ValueError):
    """Raised on malformed strategy text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_strategy(text: str) -> Strategy:
    params: Optional[Params] = None
    questions: list = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if params is None:
            if len(parts) != 3:
                raise StrategyParseError(line_no, f"expected 'a b c', got {raw.strip()!r}")
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise StrategyParseError(line_no, f"non-integer in header {raw.strip()!r}")
            if min(nums) < 1:
                raise StrategyParseError(line_no, f"color counts must be >= 1, got {nums}")
            params = Params(*nums)
            continue
        if len(parts) != 3:
            raise StrategyParseError(line_no, f"expected 'q1 q2 q3', got {raw.strip()!r}")
        try:
            q = tuple(int(p) for p in parts)
        except ValueError:
            raise StrategyParseError(line_no, f"non-integer in question {raw.strip()!r}")
        a, b, c = params.astuple()
        if not (1 <= q[0] <= a and 1 <= q[1] <= b and 1 <= q[2] <= c):
            raise StrategyParseError(line_no, f"question {q} out of range for {(a, b, c)}")
        if q in questions:
            raise StrategyParseError(line_no, f"duplicate question {q}")
        questions.append(q)
    if params is None:
        raise StrategyParseError(1, "empty input: missing 'a b c' header")
    return Strategy(params, tuple(questions))


def format_strategy(strat: Strategy) -> str:
    lines = ["%d %d %d" % strat.params.astuple()]
    lines += ["%d %d %d" % q for q in strat.questions]
    return "\n".join(lines) + "\n"
