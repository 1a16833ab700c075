"""Shared test utilities."""
import random
from typing import List, Optional, Tuple

from tripeg import Params, Strategy, question_types

Question = Tuple[int, int, int]


def random_abc_strategy(rng: random.Random, a: int, b: int, c: int,
                        n: int) -> Optional[Strategy]:
    """Random strategy of size n on (a,b,c) whose questions are all of type
    A, B or C, or None when the sampler cannot realize one.

    A question is type A/B/C when its color occurs once on exactly one peg
    and twice on the other two, so the type counts (nA,nB,nC) must share a
    parity (doubles pair up) and fit each peg's color budget.  Colors are
    then assigned per peg: a fresh color to every single, and a random
    perfect matching of the doubles.
    """
    for _ in range(200):
        combos = [(na, nb, n - na - nb)
                  for na in range(n + 1) for nb in range(n + 1 - na)
                  if na % 2 == nb % 2 == (n - na - nb) % 2
                  and na + (nb + (n - na - nb)) // 2 <= a
                  and nb + (na + (n - na - nb)) // 2 <= b
                  and (n - na - nb) + (na + nb) // 2 <= c]
        if not combos:
            return None
        na, nb, nc = rng.choice(combos)
        tys = ["A"] * na + ["B"] * nb + ["C"] * nc
        cols: List[List[int]] = [[0] * n for _ in range(3)]
        for peg, (cap, single_type) in enumerate(((a, "A"), (b, "B"), (c, "C"))):
            singles = [i for i in range(n) if tys[i] == single_type]
            doubles = [i for i in range(n) if tys[i] != single_type]
            palette = rng.sample(range(1, cap + 1), len(singles) + len(doubles) // 2)
            for k, i in enumerate(singles):
                cols[peg][i] = palette[k]
            rng.shuffle(doubles)
            for k in range(0, len(doubles), 2):
                color = palette[len(singles) + k // 2]
                cols[peg][doubles[k]] = color
                cols[peg][doubles[k + 1]] = color
        questions = list(zip(cols[0], cols[1], cols[2]))
        if len(set(questions)) != n:
            continue
        strat = Strategy(Params(a, b, c), tuple(questions))
        if all(t in "ABC" for t in question_types(strat)):
            return strat
    return None


def relabel_peg(strat: Strategy, peg: int, perm: dict) -> Strategy:
    """Apply a color permutation (dict, 1-based) to one peg (0-based here)."""
    qs = tuple(tuple(perm[v] if p == peg else v for p, v in enumerate(q))
               for q in strat.questions)
    return Strategy(strat.params, qs)
