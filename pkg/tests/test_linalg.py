"""Exact elimination: ranks, kernels and solves, cross-checked directly."""

import random
from fractions import Fraction

from su21_invariants import linalg
from su21_invariants.linalg import SparseMatrix


def _apply(rows, vec):
    out = {}
    for r, row in enumerate(rows):
        total = sum(v * vec.get(c, 0) for c, v in row.items())
        if total:
            out[r] = total
    return out


def test_rank_small_frozen():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]
    assert linalg.rank_of_rows(rows) == 2
    assert linalg.rank_of_rows([]) == 0
    assert linalg.rank_of_rows([{}]) == 0


def test_kernel_annihilates():
    rows = [
        {0: 1, 1: 1, 2: 1},
        {0: Fraction(1, 2), 2: Fraction(-1, 2)},
    ]
    kern = linalg.kernel_of_rows(rows, 3)
    assert len(kern) == 1
    for vec in kern:
        assert _apply(rows, vec) == {}


def test_rank_plus_nullity_random():
    rng = random.Random(7)
    for _ in range(60):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        rows = []
        for _ in range(nrows):
            row = {}
            for c in range(ncols):
                if rng.random() < 0.6:
                    v = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    if v:
                        row[c] = v
            rows.append(row)
        rank = linalg.rank_of_rows(rows)
        kern = linalg.kernel_of_rows(rows, ncols)
        assert rank + len(kern) == ncols
        for vec in kern:
            assert _apply(rows, vec) == {}


def test_rank_is_column_order_independent():
    rng = random.Random(11)
    rows = []
    for _ in range(8):
        rows.append(
            {c: Fraction(rng.randint(-3, 3)) for c in range(6) if rng.random() < 0.7}
        )
    mat = SparseMatrix.from_rows(rows, 6)
    perm = list(range(6))
    rng.shuffle(perm)
    permuted = mat.permuted_columns(perm)
    assert mat.rank() == permuted.rank()
    assert len(mat.kernel_basis()) == len(permuted.kernel_basis())


def test_rref_pivots_are_one_and_reduced():
    rows = [{0: 2, 1: 4, 2: 2}, {0: 1, 1: 2, 2: 3}, {1: 5, 2: 5}]
    red = linalg.rref_rows(rows)
    for lead, row in red.items():
        assert row[lead] == 1
        for other in red:
            if other != lead:
                assert other not in row


def test_solve_consistent_and_inconsistent():
    rows = [{0: 2, 1: 1}, {1: 3}]
    sol = linalg.solve_rows(rows, {0: 5, 1: 6}, 2)
    assert sol == {0: Fraction(3, 2), 1: 2}
    rows = [{0: 1}, {0: 1}]
    assert linalg.solve_rows(rows, {0: 1, 1: 2}, 1) is None


def test_solve_underdetermined_picks_zero_free_vars():
    rows = [{0: 1, 1: 1}]
    sol = linalg.solve_rows(rows, {0: 4}, 2)
    assert sol == {0: 4}


def test_membership_reduction():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    pivots = linalg.echelon_rows(rows)
    assert not linalg.reduce_against(pivots, {0: 1, 2: -1})
    assert linalg.reduce_against(pivots, {0: 1, 2: 1})


def test_sparse_matrix_round_trip():
    mat = SparseMatrix(2, 3, {(0, 0): 1, (1, 2): Fraction(1, 2), (0, 1): 0})
    assert mat.entries == {(0, 0): 1, (1, 2): Fraction(1, 2)}
    assert mat.row_dicts() == [{0: 1}, {2: Fraction(1, 2)}]
    assert mat.rank() == 2
