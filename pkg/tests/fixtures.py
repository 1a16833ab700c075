"""Hand-frozen strategies shared across the test suite.

Each feasible entry lists every parameter triple the question list serves
(some question lists are valid strategies for two triples, differing only
in the top color of one peg being unused).  All entries were validated with
an independent brute-force checker before freezing.
"""

# name -> (list of parameter triples, questions)
FEASIBLE = {
    "path_333": (
        [(3, 3, 3)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (3, 3, 1)],
    ),
    "ge_exception_444_445": (
        [(4, 4, 4), (4, 4, 5)],
        [(1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 3), (3, 4, 4), (4, 4, 4)],
    ),
    "eq_exception_466": (
        [(4, 6, 6)],
        [(1, 1, 1), (1, 2, 2), (2, 3, 2), (2, 4, 1),
         (3, 5, 3), (3, 6, 4), (4, 6, 5), (4, 5, 6)],
    ),
    "ge_mod01_789_7810": (
        [(7, 8, 9), (7, 8, 10)],
        [(1, 1, 1), (2, 1, 1), (3, 2, 2), (3, 3, 3), (4, 4, 3), (4, 5, 2),
         (5, 6, 4), (5, 7, 5), (6, 7, 6), (6, 8, 7), (7, 8, 8), (7, 6, 9)],
    ),
    "ge_mod23_334_335": (
        [(3, 3, 4), (3, 3, 5)],
        [(1, 1, 1), (2, 2, 1), (2, 3, 2), (3, 3, 3), (3, 1, 4)],
    ),
    "ge_mod23_899_8910": (
        [(8, 9, 9), (8, 9, 10)],
        [(1, 1, 1), (2, 1, 1), (3, 2, 2), (3, 3, 3), (4, 4, 3), (4, 5, 2),
         (5, 6, 4), (6, 7, 4), (6, 8, 5), (7, 8, 6), (7, 9, 7),
         (8, 9, 8), (8, 6, 9)],
    ),
    "diagonal_559_5510": (
        [(5, 5, 9), (5, 5, 10)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 4), (3, 3, 5),
         (3, 4, 6), (4, 4, 7), (4, 5, 8), (5, 5, 9)],
    ),
    "wide_3511": (
        [(3, 5, 11)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 4), (3, 3, 5),
         (3, 4, 6), (3, 4, 7), (3, 5, 8), (3, 5, 9), (3, 5, 10)],
    ),
    "eq_exception_233": (
        [(2, 3, 3)],
        [(1, 1, 1), (1, 2, 2), (2, 1, 2)],
    ),
    "eq_exception_345": (
        [(3, 4, 5)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 4), (3, 1, 4)],
    ),
    "eq_457": (
        [(4, 5, 7)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 1, 4), (3, 3, 5),
         (3, 4, 6), (4, 3, 6)],
    ),
    "eq_699": (
        [(6, 9, 9)],
        [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 1, 4), (3, 3, 5), (3, 4, 6),
         (4, 5, 6), (4, 6, 7), (5, 7, 7), (5, 8, 8), (6, 3, 8)],
    ),
    "narrow_589": (
        [(5, 8, 9)],
        [(1, 1, 1), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 5, 3),
         (3, 6, 4), (4, 6, 5), (4, 7, 6), (5, 7, 7), (5, 5, 8)],
    ),
    "narrow_123": (
        [(1, 2, 3)],
        [(1, 1, 1), (1, 1, 2)],
    ),
    "narrow_244": (
        [(2, 4, 4)],
        [(1, 1, 1), (1, 2, 1), (1, 3, 2), (2, 3, 3)],
    ),
    "narrow_4810": (
        [(4, 8, 10)],
        [(1, 1, 1), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 5, 3), (3, 6, 4),
         (4, 6, 5), (4, 7, 6), (4, 7, 7), (4, 5, 8), (4, 5, 10)],
    ),
}

# the projected (2,3,3) strategy that loses feasibility: merging peg-1
# colors 3 and 2 in path_333 leaves two secrets with equal signatures
INFEASIBLE_233 = {
    "dims": (2, 3, 3),
    "questions": [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 1)],
    "witness": ((1, 3, 3), (2, 1, 2)),
}

# construct() reproduces these fixtures question-for-question (as sets)
CONSTRUCT_EQUALS = {
    "ge_exception_444_445": (4, 4, 4),
    "eq_exception_466": (4, 6, 6),
    "ge_mod01_789_7810": (7, 8, 9),
    "ge_mod23_334_335": (3, 3, 4),
    "ge_mod23_899_8910": (8, 9, 9),
    "diagonal_559_5510": (5, 5, 9),
    "wide_3511": (3, 5, 11),
    "eq_exception_233": (2, 3, 3),
    "eq_457": (4, 5, 7),
    "eq_699": (6, 9, 9),
    "eq_exception_345": (3, 4, 5),
    "narrow_589": (5, 8, 9),
    "narrow_123": (1, 2, 3),
    "narrow_244": (2, 4, 4),
    "narrow_4810": (4, 8, 10),
}
