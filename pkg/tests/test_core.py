import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripeg import (FeasibilityResult, Params, Strategy, StrategyParseError,
                    all_secrets, format_strategy, match_count, parse_strategy,
                    signature, strategy, verify_feasible)

from fixtures import FEASIBLE, INFEASIBLE_233
from helpers import relabel_peg


# ---------------------------------------------------------------------------
# Params
# ---------------------------------------------------------------------------

def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 1, 1)
    with pytest.raises(ValueError):
        Params(1, -2, 1)
    assert Params(2, 3, 4).astuple() == (2, 3, 4)


def test_params_canonicalize():
    p = Params(9, 6, 9)
    canon, perm = p.canonicalize()
    assert canon.astuple() == (6, 9, 9)
    # perm maps canonical peg index -> original peg index
    assert tuple(p.astuple()[i] for i in perm) == canon.astuple()
    assert not p.is_canonical
    assert canon.is_canonical
    # ties keep the original order (stable)
    same, perm2 = Params(3, 3, 3).canonicalize()
    assert same.astuple() == (3, 3, 3) and perm2 == (0, 1, 2)


def test_secret_count():
    assert Params(2, 3, 4).secret_count() == 24
    assert len(list(all_secrets(Params(2, 3, 4)))) == 24


def test_all_secrets_lex_order():
    secrets = list(all_secrets(Params(2, 2, 2)))
    assert secrets == sorted(secrets)
    assert secrets[0] == (1, 1, 1) and secrets[-1] == (2, 2, 2)


# ---------------------------------------------------------------------------
# match_count / signature
# ---------------------------------------------------------------------------

def test_match_count_examples():
    assert match_count((1, 1, 1), (1, 1, 1)) == 3
    assert match_count((2, 1, 2), (1, 1, 1)) == 1
    assert match_count((1, 3, 3), (1, 2, 2)) == 1


@given(st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)),
       st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)))
def test_match_count_symmetric(s, q):
    assert match_count(s, q) == match_count(q, s)
    assert 0 <= match_count(s, q) <= 3
    assert match_count(s, s) == 3


def test_signature_hand_evaluated():
    s = strategy(3, 3, 3, FEASIBLE["path_333"][1])
    assert signature(s, (1, 1, 1)) == (3, 1, 0, 1)
    assert signature(s, (3, 3, 3)) == (0, 0, 1, 2)


def test_signature_empty_strategy():
    s = Strategy(Params(2, 2, 2), ())
    assert signature(s, (2, 1, 2)) == ()


def test_signature_rejects_out_of_range_secret():
    s = strategy(2, 3, 3, INFEASIBLE_233["questions"])
    with pytest.raises(ValueError):
        signature(s, (3, 1, 1))


def test_colliding_secrets_share_signature():
    s = strategy(2, 3, 3, INFEASIBLE_233["questions"])
    assert signature(s, (2, 1, 2)) == signature(s, (1, 3, 3))


# ---------------------------------------------------------------------------
# Strategy construction rules
# ---------------------------------------------------------------------------

def test_strategy_rejects_duplicates():
    with pytest.raises(ValueError):
        strategy(2, 2, 2, [(1, 1, 1), (1, 1, 1)])


def test_strategy_rejects_out_of_range():
    with pytest.raises(ValueError):
        strategy(2, 2, 2, [(1, 1, 3)])
    with pytest.raises(ValueError):
        strategy(2, 2, 2, [(0, 1, 1)])


# ---------------------------------------------------------------------------
# verify_feasible
# ---------------------------------------------------------------------------

def test_empty_strategy_feasibility():
    assert verify_feasible(Strategy(Params(1, 1, 1), ())).feasible
    res = verify_feasible(Strategy(Params(1, 1, 2), ()))
    assert not res.feasible
    assert res.witness == ((1, 1, 1), (1, 1, 2))


@pytest.mark.parametrize("name", sorted(FEASIBLE))
def test_fixture_strategies_feasible(name):
    dims_list, questions = FEASIBLE[name]
    for dims in dims_list:
        res = verify_feasible(strategy(*dims, questions))
        assert res.feasible, f"{name} on {dims}: witness {res.witness}"


def test_projected_233_witness_exact():
    res = verify_feasible(strategy(2, 3, 3, INFEASIBLE_233["questions"]))
    assert not res.feasible
    assert res.witness == INFEASIBLE_233["witness"]


def test_witness_is_lexicographically_smallest_pair():
    # no questions at all: every pair collides, so the witness must be the
    # first two secrets in lexicographic order
    res = verify_feasible(Strategy(Params(2, 2, 2), ()))
    assert res.witness == ((1, 1, 1), (1, 1, 2))


def test_feasibility_result_invariant():
    with pytest.raises(ValueError):
        FeasibilityResult(True, ((1, 1, 1), (1, 1, 2)))
    with pytest.raises(ValueError):
        FeasibilityResult(False, None)


def test_adding_question_preserves_feasibility():
    dims_list, questions = FEASIBLE["ge_mod23_334_335"]
    base = strategy(3, 3, 4, questions)
    assert verify_feasible(base).feasible
    extra = next(q for q in all_secrets(base.params) if q not in base.questions)
    bigger = Strategy(base.params, base.questions + (extra,))
    assert verify_feasible(bigger).feasible


@given(st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_relabel_invariance(rng):
    dims = (2, 3, 3)
    questions = INFEASIBLE_233["questions"]
    s = strategy(*dims, questions)
    before = verify_feasible(s).feasible
    for peg in range(3):
        colors = list(range(1, dims[peg] + 1))
        shuffled = colors[:]
        rng.shuffle(shuffled)
        s = relabel_peg(s, peg, dict(zip(colors, shuffled)))
    assert verify_feasible(s).feasible == before


def test_peg_swap_invariance():
    dims_list, questions = FEASIBLE["eq_exception_233"]
    s = strategy(2, 3, 3, questions)
    swapped = Strategy(Params(2, 3, 3),
                       tuple((q[0], q[2], q[1]) for q in s.questions))
    assert verify_feasible(swapped).feasible == verify_feasible(s).feasible


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def test_format_parse_round_trip():
    for name, (dims_list, questions) in sorted(FEASIBLE.items()):
        s = strategy(*dims_list[0], questions)
        assert parse_strategy(format_strategy(s)) == s


def test_parse_comments_and_blanks():
    text = "# header comment\n\n2 3 3\n1 1 1  # inline\n\n# trailing\n2 1 2\n"
    s = parse_strategy(text)
    assert s.params.astuple() == (2, 3, 3)
    assert s.questions == ((1, 1, 1), (2, 1, 2))


@pytest.mark.parametrize("text,line_no", [
    ("", 1),
    ("1 2\n", 1),
    ("x y z\n", 1),
    ("0 2 2\n", 1),
    ("2 2 2\n1 1\n", 2),
    ("2 2 2\n1 1 one\n", 2),
    ("2 2 2\n1 1 3\n", 2),
    ("2 2 2\n1 1 1\n1 1 1\n", 3),
    ("2 2 2\n# c\n\n1 1 9\n", 4),
])
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(StrategyParseError) as err:
        parse_strategy(text)
    assert err.value.line_no == line_no


def test_exhaustive_small_feasibility_against_pairwise():
    """Hash-based verify agrees with naive pairwise comparison on all
    3-question strategies over (2,2,2)."""
    params = Params(2, 2, 2)
    secrets = list(all_secrets(params))
    rng = random.Random(7)
    pool = list(itertools.combinations(secrets, 3))
    for questions in rng.sample(pool, 25):
        s = Strategy(params, questions)
        naive = all(signature(s, u) != signature(s, v)
                    for u, v in itertools.combinations(secrets, 2))
        assert verify_feasible(s).feasible == naive
