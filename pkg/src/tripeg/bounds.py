"""Lower/upper bounds on the minimum feasible strategy size, and the exact
value where the case analysis closes it.

Every bound carries a provenance tag naming the argument that produced it:

* ``trivial``                  — a=b=c=1 needs no questions.
* ``half_sum_minus_one``       — floor(S/2)-1 questions never suffice.
* ``peg3_colors_minus_one``    — c-1 questions are needed (and enough when
                                 2b <= c).
* ``two_thirds_two_pegs``      — floor(2(b+c-1)/3), tight when 3a < b+c < 2b+b.
* ``half_sum``                 — floor(S/2), the generic construction size.
* ``balanced_halves``          — floor(S/2)-1 suffices when 3a = b+c.
* ``twice_a_minus_one``        — the diagonal bound 2a-1 for (a,a,2a-1|2a).
* ``curated_exhaustive``       — settled by exhaustive search for a fixed
                                 list of small triples.
* ``exhaustive_exception_466`` — (4,6,6) alone needs 8, one more than its
                                 neighbors suggest.

For triples with 3a > b+c that no theorem or search has closed, the answer
is one of floor(S/2)-1 or floor(S/2) and ``dimension`` reports exact=None.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .constructors import CaseTag, classify_case, construct
from .core import Params, Strategy

#: Triples with 3a > b+c whose minimum was pinned to floor(S/2) by search.
CURATED_EXACT = frozenset({
    (3, 3, 4), (3, 4, 4), (4, 4, 5), (4, 4, 6), (4, 5, 5), (4, 5, 6),
    (5, 5, 6), (5, 5, 7), (5, 5, 8), (5, 6, 6), (5, 6, 7), (5, 6, 8),
    (5, 7, 7), (6, 6, 7), (6, 6, 8), (6, 6, 9), (6, 7, 7), (6, 7, 8),
})

_EXCEPTION_466 = (4, 6, 6)


def lower_bound(params: Params) -> Tuple[int, str]:
    """Best general lower bound and its provenance (peg order irrelevant)."""
    a, b, c = sorted(params.astuple())
    if (a, b, c) == _EXCEPTION_466:
        return 8, "exhaustive_exception_466"
    s = a + b + c
    candidates = [(s // 2 - 1, "half_sum_minus_one"),
                  (c - 1, "peg3_colors_minus_one")]
    if 2 * b > c:
        candidates.append((2 * (b + c - 1) // 3, "two_thirds_two_pegs"))
    return max(candidates, key=lambda t: t[0])


def upper_bound(params: Params) -> Tuple[int, str]:
    """Size of the strategy ``construct`` builds, with provenance."""
    canon, _ = params.canonicalize()
    a, b, c = canon.astuple()
    tag = classify_case(canon)
    s = a + b + c
    if tag == CaseTag.Trivial:
        return 0, "trivial"
    if tag == CaseTag.AA2A:
        return 2 * a - 1, "twice_a_minus_one"
    if tag == CaseTag.EQ_466:
        return 8, "exhaustive_exception_466"
    if tag in (CaseTag.EQ_general, CaseTag.EQ_exception):
        return s // 2 - 1, "balanced_halves"
    if tag in (CaseTag.GE_mod01, CaseTag.GE_mod23, CaseTag.GE_exception445):
        return s // 2, "half_sum"
    if tag == CaseTag.LT_wide:
        return c - 1, "peg3_colors_minus_one"
    return 2 * (b + c - 1) // 3, "two_thirds_two_pegs"


@dataclass(frozen=True)
class DimensionResult:
    """Everything known about the minimum feasible size for one triple."""

    params: Params
    case: CaseTag
    lower: int
    lower_provenance: str
    upper: int
    upper_provenance: str
    exact: Optional[int] = None
    exact_provenance: Optional[str] = None
    witness: Optional[Strategy] = None

    @property
    def is_closed(self) -> bool:
        return self.exact is not None


def _exact_value(canon: Params) -> Tuple[Optional[int], Optional[str]]:
    a, b, c = canon.astuple()
    tag = classify_case(canon)
    s = a + b + c
    if tag == CaseTag.Trivial:
        return 0, "trivial"
    if tag == CaseTag.AA2A:
        return 2 * a - 1, "twice_a_minus_one"
    if tag == CaseTag.EQ_466:
        return 8, "exhaustive_exception_466"
    if tag in (CaseTag.EQ_general, CaseTag.EQ_exception):
        return s // 2 - 1, "balanced_halves"
    if tag in (CaseTag.LT_wide,):
        return c - 1, "peg3_colors_minus_one"
    if tag in (CaseTag.LT_narrow, CaseTag.LT_narrow_exception):
        return 2 * (b + c - 1) // 3, "two_thirds_two_pegs"
    # 3a > b+c: closed for the all-equal family and the curated searches
    if a == b == c:
        return s // 2, "half_sum"
    if (a, b, c) in CURATED_EXACT:
        return s // 2, "curated_exhaustive"
    return None, None


def dimension(params: Params, with_witness: bool = False) -> DimensionResult:
    """Bounds (and the exact value when the case is closed) for one triple.

    The reported lower bound is tightened to the exact value on closed cases,
    so is_closed implies lower == exact == upper.  ``with_witness`` attaches
    a constructed strategy of the upper-bound size in the caller's peg order.
    """
    canon, _ = params.canonicalize()
    lo, lo_prov = lower_bound(canon)
    up, up_prov = upper_bound(canon)
    exact, exact_prov = _exact_value(canon)
    if exact is not None and exact > lo:
        lo, lo_prov = exact, exact_prov
    witness = construct(params) if with_witness else None
    return DimensionResult(
        params=params, case=classify_case(canon),
        lower=lo, lower_provenance=lo_prov,
        upper=up, upper_provenance=up_prov,
        exact=exact, exact_provenance=exact_prov,
        witness=witness)


def iter_table(max_sum: int) -> Iterator[DimensionResult]:
    """Dimension results for every canonical triple with a+b+c <= max_sum,
    in lexicographic (a, b, c) order."""
    if max_sum < 3:
        raise ValueError("max_sum must be at least 3")
    for a in range(1, max_sum // 3 + 1):
        for b in range(a, (max_sum - a) // 2 + 1):
            for c in range(b, max_sum - a - b + 1):
                yield dimension(Params(a, b, c))
