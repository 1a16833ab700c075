"""Strategy transformations: peg augmentation and color projection.

*Augmentation* grows one peg's color range by 1 and adds a copy of an
existing question with the new color on that peg; it always preserves
feasibility (the new color's secrets are told apart by the copied pair).

*Projection* merges color ``j`` into color ``i`` on one peg and renumbers,
shrinking that peg's range by 1.  It preserves feasibility whenever the
coverage condition of :func:`check_projectable` holds: for every combination
``(y, z)`` of colors on the other two pegs, some question uses ``i`` or
``j`` on the merged peg while avoiding both ``y`` and ``z``.  The condition
is sufficient, not necessary.
"""
from __future__ import annotations

import warnings
from typing import List

from .core import Params, Question, Strategy


def _check_peg(peg: int) -> int:
    if peg not in (1, 2, 3):
        raise ValueError(f"peg must be 1, 2 or 3, got {peg}")
    return peg - 1


def augment_peg(strat: Strategy, peg: int, source: int = -1) -> Strategy:
    """Extend `peg`'s range by one color and copy question `source` onto it.

    The copy keeps the source question's other two coordinates and uses the
    brand-new color on the chosen peg, so the result has exactly one more
    question and one more color.
    """
    p = _check_peg(peg)
    if not strat.questions:
        raise ValueError("cannot augment an empty strategy: no source question")
    src = strat.questions[source]        # IndexError on bad source is fine
    dims = list(strat.params.astuple())
    new_color = dims[p] + 1
    dims[p] = new_color
    q = list(src)
    q[p] = new_color
    return Strategy(Params(*dims), strat.questions + (tuple(q),))


def check_projectable(strat: Strategy, peg: int, i: int, j: int) -> bool:
    """Coverage test for merging colors i and j on a peg.

    True iff every pair (y, z) of colors on the other two pegs is "covered":
    some question has its chosen-peg color in {i, j}, and its other two
    coordinates differ from y and z respectively.  Symmetric in i and j.
    """
    p = _check_peg(peg)
    dims = strat.params.astuple()
    if i == j:
        raise ValueError("projection colors must differ")
    for color in (i, j):
        if not 1 <= color <= dims[p]:
            raise ValueError(f"color {color} out of range 1..{dims[p]} on peg {peg}")
    o1, o2 = [x for x in range(3) if x != p]
    candidates = [q for q in strat.questions if q[p] in (i, j)]
    for y in range(1, dims[o1] + 1):
        for z in range(1, dims[o2] + 1):
            if not any(q[o1] != y and q[o2] != z for q in candidates):
                return False
    return True


def project(strat: Strategy, peg: int, i: int, j: int) -> Strategy:
    """Merge color j into color i on a peg and renumber colors above j.

    Questions made identical by the merge are deduplicated (set semantics);
    a dedupe shrinks the strategy and is surfaced as a warning.  Use
    :func:`check_projectable` first when feasibility must be preserved.
    """
    p = _check_peg(peg)
    dims = list(strat.params.astuple())
    if i == j:
        raise ValueError("projection colors must differ")
    for color in (i, j):
        if not 1 <= color <= dims[p]:
            raise ValueError(f"color {color} out of range 1..{dims[p]} on peg {peg}")
    out: List[Question] = []
    seen = set()
    dropped = 0
    for q in strat.questions:
        v = q[p]
        if v == j:
            v = i                        # merge first ...
        if v > j:
            v -= 1                       # ... then close the gap left by j
        t = list(q)
        t[p] = v
        tq = tuple(t)
        if tq in seen:
            dropped += 1
            continue
        seen.add(tq)
        out.append(tq)
    dims[p] -= 1
    if dropped:
        warnings.warn(
            f"projection merged {dropped} duplicate question(s); "
            f"strategy shrank from {len(strat.questions)} to {len(out)}",
            stacklevel=2)
    return Strategy(Params(*dims), tuple(out))
