import random

import pytest

from intercode.fields import field_make
from intercode.linalg import (
    dot,
    identity,
    inverse,
    matrix,
    rank,
    right_nullspace,
    row_basis,
    rref,
    vec_mat_mul,
    zero_matrix,
)

F2 = field_make(2, 1)
F3 = field_make(3, 1)
F9 = field_make(3, 2)


def test_rref_known_example():
    m = matrix(F3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    r, pivots = rref(m)
    assert pivots == (0, 1)
    assert r.rows() == ((1, 0, 2), (0, 1, 2), (0, 0, 0))


def test_rref_is_idempotent():
    rng = random.Random(7)
    for _ in range(30):
        rows = [[rng.randrange(3) for _ in range(4)] for _ in range(3)]
        m = matrix(F3, rows)
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1.rows() == r2.rows() and p1 == p2


def test_rank_nullity():
    rng = random.Random(11)
    for _ in range(25):
        rows = [[rng.randrange(9) for _ in range(5)] for _ in range(3)]
        m = matrix(F9, rows)
        ns = right_nullspace(m)
        assert rank(m) + ns.nrows == m.ncols
        for v in ns.rows():
            assert all(
                dot(F9, row, v) == 0 for row in m.rows()
            )


def test_row_basis_spans_same_space():
    m = matrix(F2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    b = row_basis(m)
    assert b.nrows == 2
    assert rank(b) == 2


def test_inverse_round_trip():
    rng = random.Random(3)
    for field in (F2, F3, F9):
        found = 0
        while found < 10:
            rows = [[rng.randrange(field.order) for _ in range(3)] for _ in range(3)]
            m = matrix(field, rows)
            if rank(m) < 3:
                continue
            found += 1
            assert m.mul(inverse(m)).rows() == identity(field, 3).rows()


def test_inverse_rejects_singular_and_rectangular():
    with pytest.raises(ValueError, match="singular"):
        inverse(matrix(F2, [[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        inverse(matrix(F2, [[1, 0, 1]]))


def test_vec_mat_mul_matches_by_hand():
    m = matrix(F3, [[1, 2], [0, 1], [2, 2]])
    assert vec_mat_mul(F3, (1, 1, 1), m) == (0, 2)
    assert vec_mat_mul(F3, (0, 0, 0), m) == (0, 0)


def test_matrix_validation():
    with pytest.raises(ValueError):
        matrix(F2, [[1, 0], [1]])  # ragged
    with pytest.raises(ValueError):
        matrix(F2, [[2, 0]])  # out-of-range encoding
    with pytest.raises(ValueError):
        matrix(F2, [])  # width unknown without ncols
    empty = matrix(F2, [], ncols=4)
    assert empty.nrows == 0 and empty.ncols == 4


def test_zero_matrix_and_entries_are_immutable():
    z = zero_matrix(F2, 2, 3)
    assert z.rows() == ((0, 0, 0), (0, 0, 0))
    assert isinstance(z.entries, tuple)
