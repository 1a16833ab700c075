"""tripeg — strategies for three-peg static black-peg Mastermind.

A secret is a triple of colors on three pegs with a, b and c colors
respectively; a question is scored by how many pegs match exactly.  A set
of questions is *feasible* when every secret gets a distinct score vector,
and the package constructs, verifies, analyzes and searches such sets, and
reports the minimum feasible size (the metric dimension of the
corresponding product of three complete graphs) where it is known.
"""

from .analysis import (Block, Certificate, PatternHit, PatternReport,
                       StrategyGraph, agreement_count, build_strategy_graph,
                       certify_feasible, check_structural_filters,
                       classify_questions, detect_patterns, missing_colors,
                       question_types, CERTIFIED_FEASIBLE,
                       CERTIFIED_INFEASIBLE, UNKNOWN)
from .bounds import (CURATED_EXACT, DimensionResult, dimension, iter_table,
                     lower_bound, upper_bound)
from .constructors import (CaseTag, ConstructionPlan, classify_case,
                           construct, construct_aa2a, construct_equal,
                           construct_ge_mod01, construct_ge_mod23,
                           construct_lt_narrow, construct_lt_wide,
                           plan_blocks)
from .core import (FeasibilityResult, Params, Question, Signature, Strategy,
                   StrategyParseError, all_secrets, format_strategy,
                   match_count, parse_strategy, permute_question, signature,
                   strategy, verify_feasible)
from .search import (BUDGET, EXHAUSTED, FOUND, Budget, SearchOutcome,
                     canonical_key, exists_feasible, min_feasible_size)
from .transforms import augment_peg, check_projectable, project

__version__ = "0.1.0"

__all__ = [
    "Block", "BUDGET", "Budget", "CaseTag", "Certificate",
    "CERTIFIED_FEASIBLE", "CERTIFIED_INFEASIBLE", "ConstructionPlan",
    "CURATED_EXACT", "DimensionResult", "EXHAUSTED", "FeasibilityResult",
    "FOUND", "Params", "PatternHit", "PatternReport", "Question",
    "SearchOutcome", "Signature", "Strategy", "StrategyGraph",
    "StrategyParseError", "UNKNOWN", "agreement_count", "all_secrets",
    "augment_peg", "build_strategy_graph", "canonical_key",
    "certify_feasible", "check_projectable", "check_structural_filters",
    "classify_case", "classify_questions", "construct", "construct_aa2a",
    "construct_equal", "construct_ge_mod01", "construct_ge_mod23",
    "construct_lt_narrow", "construct_lt_wide", "detect_patterns",
    "dimension", "exists_feasible", "format_strategy", "iter_table",
    "lower_bound", "match_count", "min_feasible_size", "missing_colors",
    "parse_strategy", "permute_question", "plan_blocks", "project",
    "question_types", "signature", "strategy", "upper_bound",
    "verify_feasible",
]
