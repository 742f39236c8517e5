"""q-matroids: rank functions on subspace lattices, duality, circuits,
vertical connectivity, and the induced classical matroid."""

import pytest

from intercode.fields import field_make
from intercode.matroid import check_matroid_axioms, vertical_connectivity
from intercode.qmatroid import (
    adapted_basis_for_separation,
    check_qmatroid_axioms,
    has_disjoint_q_circuits,
    induced_classical_matroid,
    q_circuits,
    q_dual,
    q_vertical_connectivity,
    qmatroid_from_rank_code,
    qmatroid_from_rank_table,
    serialize_subspace,
    uniform_qmatroid,
)
from intercode.rankcodes import ExtensionSpec, rank_code_from_generator
from intercode.subspaces import subspace_from_rows, subspace_lattice

F2 = field_make(2, 1)
EXT2 = ExtensionSpec(F2, 2)


def _table_of(m):
    lattice = subspace_lattice(m.field, m.ambient)
    return {serialize_subspace(s): m.rho(s) for s in lattice.subspaces}


def test_uniform_qmatroid_rank_values():
    u = uniform_qmatroid(2, 3, F2)
    assert u.full_rank == 2
    line = subspace_from_rows(F2, 3, [[1, 1, 0]])
    plane = subspace_from_rows(F2, 3, [[1, 0, 0], [0, 1, 0]])
    assert u.rho(line) == 1
    assert u.rho(plane) == 2


def test_qmatroid_from_rank_code_is_dimension_on_free_code():
    code = rank_code_from_generator(EXT2, [[1, 0], [0, 1]])
    m = qmatroid_from_rank_code(code)
    for s in subspace_lattice(F2, 2).subspaces:
        assert m.rho(s) == s.dim


def test_qmatroid_axioms_pass_and_fail_named():
    ok, message = check_qmatroid_axioms(uniform_qmatroid(1, 3, F2))
    assert ok and message is None
    table = _table_of(uniform_qmatroid(1, 2, F2))
    # push the full space to rank 2 while a line stays at cap 1: two lines
    # then sum to 2 > 1 + 1 minus the zero meet, breaking submodularity
    table["1,0,0,1"] = 2
    table["1,0"] = 0
    bad = qmatroid_from_rank_table(F2, 2, table)
    ok, message = check_qmatroid_axioms(bad)
    assert not ok
    assert message.startswith("qR3")


def test_rank_table_round_trip():
    m = uniform_qmatroid(2, 3, F2)
    rebuilt = qmatroid_from_rank_table(F2, 3, _table_of(m))
    for s in subspace_lattice(F2, 3).subspaces:
        assert rebuilt.rho(s) == m.rho(s)


def test_rank_table_requires_every_subspace():
    table = _table_of(uniform_qmatroid(1, 2, F2))
    del table["1,1"]
    with pytest.raises(ValueError, match="missing"):
        qmatroid_from_rank_table(F2, 2, table)


def test_q_dual_double_dual_identity():
    code = rank_code_from_generator(EXT2, [[1, 2, 0], [0, 1, 1]])
    m = qmatroid_from_rank_code(code)
    dd = q_dual(q_dual(m))
    for s in subspace_lattice(F2, 3).subspaces:
        assert dd.rho(s) == m.rho(s)


def test_q_dual_of_uniform_is_uniform():
    for n in range(1, 5):
        for k in range(n + 1):
            dual = q_dual(uniform_qmatroid(k, n, F2))
            mirror = uniform_qmatroid(n - k, n, F2)
            for s in subspace_lattice(F2, n).subspaces:
                assert dual.rho(s) == mirror.rho(s)


def test_q_circuits_of_uniforms():
    # rank 1 on two coordinates: the only circuit is the full plane
    circs = q_circuits(uniform_qmatroid(1, 2, F2))
    assert len(circs) == 1 and circs[0].dim == 2
    # rank 0: every line is a circuit, and two of them are disjoint
    circs = q_circuits(uniform_qmatroid(0, 2, F2))
    assert [c.dim for c in circs] == [1, 1, 1]
    ok, pair = has_disjoint_q_circuits(uniform_qmatroid(0, 2, F2))
    assert ok
    a, b = pair
    assert a.key() != b.key()


def test_uniform_q_vertical_connectivity_formula():
    for n in range(1, 5):
        for k in range(n + 1):
            kappa, _ = q_vertical_connectivity(uniform_qmatroid(k, n, F2))
            expected = n - k + 1 if n <= 2 * k - 2 else k
            assert kappa == expected, (k, n)


def test_q_separation_witness_is_consistent():
    code = rank_code_from_generator(EXT2, [[1, 0], [0, 1]])
    m = qmatroid_from_rank_code(code)
    kappa, sep = q_vertical_connectivity(m)
    assert kappa == 1
    assert sep is not None
    assert sep.lambda_value == m.rho(sep.A) + m.rho(sep.V) - m.full_rank
    assert sep.lambda_value < sep.t
    assert min(m.rho(sep.A), m.rho(sep.V)) >= sep.t
    assert sep.A.dim + sep.V.dim == m.ambient


def test_adapted_basis_raises_when_fully_connected():
    u = uniform_qmatroid(2, 3, F2)  # kappa = 2 = full rank
    with pytest.raises(ValueError, match="fully connected"):
        adapted_basis_for_separation(u)


def test_induced_classical_matroid_on_standard_basis():
    u = uniform_qmatroid(2, 4, F2)
    beta = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    induced = induced_classical_matroid(u, beta)
    for mask in range(2**4):
        subset = tuple(i for i in range(4) if mask >> i & 1)
        assert induced.rank(subset) == min(len(subset), 2)
    assert check_matroid_axioms(induced)[0]


def test_induced_classical_matroid_rejects_non_basis():
    u = uniform_qmatroid(1, 2, F2)
    with pytest.raises(ValueError, match="basis"):
        induced_classical_matroid(u, [[1, 0], [1, 0]])


def test_induced_matroid_preserves_connectivity_on_a_split_code():
    code = rank_code_from_generator(EXT2, [[1, 0], [0, 1]])
    m = qmatroid_from_rank_code(code)
    kappa, _ = q_vertical_connectivity(m)
    induced = induced_classical_matroid(m, adapted_basis_for_separation(m))
    assert vertical_connectivity(induced)[0] == kappa
