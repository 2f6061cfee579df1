import random
from fractions import Fraction

import pytest

from tropface import (Arrangement, BoolMatrix, column_space_projection,
                      combine_satisfiers, contained_partial_bijections,
                      dominates, is_realized_type, is_satisfiable,
                      project_to_plane, realize_type, residuation,
                      type_of_point, witness)

from demo_data import (S_SAT_NOT_TYPE, S_UNSAT, T_VERT, rand_arrangement,
                       rand_boolmatrix, rand_point, rand_scalar)

F = Fraction


def test_arrangement_rejects_floats_and_bad_shapes():
    with pytest.raises(TypeError):
        Arrangement([[0.5]])
    with pytest.raises(ValueError):
        Arrangement([])
    with pytest.raises(ValueError):
        Arrangement([[1, 2], [3]])
    arr = Arrangement([["1/2", 3], [-1, "7/3"]])
    assert arr.column(1) == (F(3), F(7, 3))


def test_residuation_examples():
    x = (F(2), F(-1), F(5))
    assert residuation(x, x) == 0
    c = F(7, 2)
    assert residuation(x, tuple(v + c for v in x)) == c
    assert residuation((0, 0, 0), (3, 1, 2)) == 1
    with pytest.raises(ValueError):
        residuation((0, 0), (0, 0, 0))


def test_residuation_adjunction():
    rng = random.Random(2)
    for _ in range(200):
        x = rand_point(rng, 3)
        y = rand_point(rng, 3)
        r = residuation(x, y)
        assert all(r + xk <= yk for xk, yk in zip(x, y))
        eps = F(1, 7)
        assert not all(r + eps + xk <= yk for xk, yk in zip(x, y))


def test_dominates_examples(demo):
    # the apex of a column lies in every sector of its own hyperplane
    for j in range(4):
        apex = demo.column(j)
        for i in range(3):
            assert dominates(demo, j, apex, i)
    origin = (0, 0, 0)
    assert [dominates(demo, 0, origin, i) for i in range(3)] == \
        [False, True, False]
    with pytest.raises(IndexError):
        dominates(demo, 4, origin, 0)
    with pytest.raises(IndexError):
        dominates(demo, 0, origin, 3)


def test_dominates_scale_invariance(demo):
    rng = random.Random(4)
    for _ in range(100):
        y = rand_point(rng, 3)
        c = rand_scalar(rng)
        shifted = tuple(v + c for v in y)
        for j in range(4):
            for i in range(3):
                assert dominates(demo, j, y, i) == dominates(demo, j, shifted, i)


def test_type_of_point_fixtures(demo):
    assert type_of_point(demo, (0, 0, 0)) == T_VERT
    far = type_of_point(demo, (-100, 0, 0))
    assert far.columns() == ((0,), (0,), (0,), (0,))
    for j in range(4):
        t = type_of_point(demo, demo.column(j))
        assert t.col_mask(j) == 0b111
    with pytest.raises(ValueError):
        type_of_point(demo, (0, 0))


def test_type_scale_invariance(demo):
    rng = random.Random(6)
    for _ in range(100):
        x = rand_point(rng, 3)
        c = rand_scalar(rng)
        assert type_of_point(demo, x) == \
            type_of_point(demo, tuple(v + c for v in x))


def test_types_have_nonempty_columns_random():
    rng = random.Random(8)
    for _ in range(50):
        arr = rand_arrangement(rng, rng.randint(1, 4), rng.randint(1, 4))
        x = rand_point(rng, arr.n)
        t = type_of_point(arr, x)
        assert all(t.col_mask(j) for j in range(arr.d))


def test_is_satisfiable_fixtures(demo):
    assert is_satisfiable(demo, BoolMatrix.zero(3, 4))
    assert not is_satisfiable(demo, S_UNSAT)
    assert is_satisfiable(demo, S_SAT_NOT_TYPE)
    with pytest.raises(ValueError):
        is_satisfiable(demo, BoolMatrix.zero(4, 3))


def test_witness_fixtures(demo):
    assert witness(demo, BoolMatrix.zero(3, 4)) is not None
    assert witness(demo, S_UNSAT) is None
    w = witness(demo, T_VERT)
    # the vertex pins all three coordinates together
    assert w[0] == w[1] == w[2]
    assert type_of_point(demo, w) == T_VERT


def test_witness_soundness_random():
    rng = random.Random(10)
    for _ in range(150):
        arr = rand_arrangement(rng, rng.randint(2, 4), rng.randint(1, 4))
        s = rand_boolmatrix(rng, arr.n, arr.d)
        w = witness(arr, s)
        assert (w is None) == (not is_satisfiable(arr, s))
        if w is not None:
            assert s <= type_of_point(arr, w)


def test_satisfiability_downward_closed():
    rng = random.Random(12)
    for _ in range(150):
        arr = rand_arrangement(rng, 3, 3)
        t = rand_boolmatrix(rng, 3, 3)
        # drop random entries of t to get s <= t
        s = BoolMatrix(3, 3, t.bits & rng.randrange(1 << 9))
        if is_satisfiable(arr, t):
            assert is_satisfiable(arr, s)


def test_row_splitting_equivalence():
    # satisfiable iff every sub-matrix with at most one 1 per row is
    rng = random.Random(14)
    for _ in range(60):
        arr = rand_arrangement(rng, 3, 3)
        s = rand_boolmatrix(rng, 3, 3)
        rows = [s.row_mask(i) for i in range(3)]
        choices = []
        for m in rows:
            opts = [0] + [1 << b for b in range(3) if (m >> b) & 1]
            choices.append(opts)
        all_single_rows_sat = True
        for r0 in choices[0]:
            for r1 in choices[1]:
                for r2 in choices[2]:
                    a = BoolMatrix.from_rows([
                        [(r0 >> b) & 1 for b in range(3)],
                        [(r1 >> b) & 1 for b in range(3)],
                        [(r2 >> b) & 1 for b in range(3)]])
                    if not is_satisfiable(arr, a):
                        all_single_rows_sat = False
        assert is_satisfiable(arr, s) == all_single_rows_sat


def test_is_realized_type_fixtures(demo):
    assert is_realized_type(demo, T_VERT)
    assert not is_realized_type(demo, S_SAT_NOT_TYPE)
    empty_col = BoolMatrix.from_columns(3, [set(), {0}, {0}, {0}])
    assert not is_realized_type(demo, empty_col)
    rng = random.Random(16)
    for _ in range(50):
        x = rand_point(rng, 3)
        assert is_realized_type(demo, type_of_point(demo, x))


def test_realized_implies_satisfiable():
    rng = random.Random(18)
    for _ in range(80):
        arr = rand_arrangement(rng, 3, 2)
        t = rand_boolmatrix(rng, 3, 2)
        if is_realized_type(arr, t):
            assert is_satisfiable(arr, t)


def test_realize_type_round_trip():
    rng = random.Random(20)
    for _ in range(80):
        arr = rand_arrangement(rng, rng.randint(2, 3), rng.randint(1, 3))
        t = rand_boolmatrix(rng, arr.n, arr.d)
        x = realize_type(arr, t)
        assert (x is None) == (not is_realized_type(arr, t))
        if x is not None:
            assert type_of_point(arr, x) == t


def test_combine_satisfiers_collapses_on_equal_points(demo):
    rng = random.Random(22)
    for _ in range(50):
        x = rand_point(rng, 3)
        u = combine_satisfiers(demo, x, x)
        tx, tu = type_of_point(demo, x), type_of_point(demo, u)
        assert tx <= tu
        assert all(uv <= xv for uv, xv in zip(u, x))
        for i in range(3):
            for j in range(4):
                if tx.entry(i, j):
                    assert u[i] == x[i]
                    break


def test_combine_satisfiers_worked_example(demo):
    sx = BoolMatrix.from_columns(3, [{1}, {0}, {0}, {0, 2}])
    sy = BoolMatrix.from_columns(3, [{1}, {0, 1}, {0}, {0}])
    x, y = witness(demo, sx), witness(demo, sy)
    meet = BoolMatrix(3, 4, sx.bits & sy.bits)
    u = combine_satisfiers(demo, x, y)
    assert meet <= type_of_point(demo, u)


def test_combine_satisfiers_shared_dominations_random():
    rng = random.Random(24)
    for _ in range(100):
        arr = rand_arrangement(rng, 3, 3)
        x, y = rand_point(rng, 3), rand_point(rng, 3)
        u = combine_satisfiers(arr, x, y)
        assert all(uv <= xv for uv, xv in zip(u, x))
        assert all(uv <= yv for uv, yv in zip(u, y))
        shared = BoolMatrix(3, 3,
                            type_of_point(arr, x).bits
                            & type_of_point(arr, y).bits)
        assert shared <= type_of_point(arr, u)


def test_column_space_projection(demo):
    for j in range(4):
        col = demo.column(j)
        assert column_space_projection(demo, col) == col
    # a max-plus combination of columns is fixed
    combo = tuple(max(demo.entries[i][0] + 2, demo.entries[i][2] - 1)
                  for i in range(3))
    assert column_space_projection(demo, combo) == combo
    y = (F(-100), F(0), F(0))
    ystar = column_space_projection(demo, y)
    assert ystar != y
    assert all(a <= b for a, b in zip(ystar, y))
    assert column_space_projection(demo, ystar) == ystar


def test_project_to_plane():
    assert project_to_plane((0, 0, 0)) == (0, 0)
    assert project_to_plane((3, 1, 2)) == (1, -1)
    rng = random.Random(26)
    for _ in range(50):
        x = rand_point(rng, 4)
        c = rand_scalar(rng)
        assert project_to_plane(x) == \
            project_to_plane(tuple(v + c for v in x))
    with pytest.raises(ValueError):
        project_to_plane((1,))


def test_single_row_arrangement_degenerate_case():
    arr = Arrangement([[0, 5, -3]])
    x = (F(7),)
    assert type_of_point(arr, x).columns() == ((0,), (0,), (0,))
    for bits in range(8):
        s = BoolMatrix(1, 3, bits)
        assert is_satisfiable(arr, s)
        assert is_realized_type(arr, s) == all(
            s.col_mask(j) for j in range(3))
