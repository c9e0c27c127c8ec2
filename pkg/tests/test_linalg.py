from fractions import Fraction

from hypothesis import given, strategies as st

from branecalc.linalg import Echelon, nullspace, rank, solve

from oracles import dense_rank

matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def as_sparse(rows):
    return [{j: v for j, v in enumerate(row) if v} for row in rows]


def columns(rows):
    return [{i: rows[i][j] for i in range(len(rows)) if rows[i][j]} for j in range(len(rows[0]))]


@given(matrices)
def test_rank_matches_dense_oracle(rows):
    assert rank(as_sparse(rows)) == dense_rank(rows)


@given(matrices)
def test_rank_with_fractions(rows):
    scaled = [[Fraction(v, i + 2) for v in row] for i, row in enumerate(rows)]
    assert rank(as_sparse(scaled)) == dense_rank(rows)


@given(matrices, st.data())
def test_solve_consistent_systems(rows, data):
    cols = columns(rows)
    z = [data.draw(st.integers(-2, 2)) for _ in cols]
    rhs = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            rhs[i] = rhs.get(i, 0) + v * z[j]
    x = solve(cols, rhs)
    assert x is not None
    got = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            got[i] = got.get(i, 0) + v * x.get(j, 0)
    assert {i: v for i, v in got.items() if v} == {i: v for i, v in rhs.items() if v}


def test_solve_inconsistent():
    assert solve([{0: 1}, {0: 2}], {1: 1}) is None


def test_solve_with_arbitrary_labels():
    x = solve([{"a": 1, "b": 1}, {"b": 1}], {"a": 2, "b": 5})
    assert x == {0: 2, 1: 3}


@given(matrices)
def test_nullspace_vectors_are_killed_and_independent(rows):
    cols = columns(rows)
    basis = nullspace(cols)
    assert len(basis) == len(cols) - dense_rank(rows)
    for v in basis:
        for i in range(len(rows)):
            assert sum(rows[i][j] * v.get(j, 0) for j in range(len(cols))) == 0
    if basis:
        assert dense_rank([[v.get(j, 0) for j in range(len(cols))] for v in basis]) == len(basis)


def test_echelon_reports_inconsistency():
    ech = Echelon()
    assert ech.add({0: 1, 1: 1}, 1)
    assert ech.add({0: 2, 1: 2}, 2)
    assert not ech.add({0: 1, 1: 1}, 3)
    assert ech.particular_solution() is None


def test_particular_solution_sets_free_coordinates_to_zero():
    ech = Echelon()
    ech.add({0: 1, 1: 1}, 4)
    assert ech.particular_solution() == {0: 4}
    assert ech.rank == 1
