"""q-matroids: rank functions on the lattice of subspaces of GF(q)^n.

The rank oracle takes a Subspace and returns an integer.  Everything that
needs "all subspaces" or "all complements" goes through the shared
SubspaceLattice, so exhaustive checks stay affordable at the intended sizes
(q = 2 up to n = 4, q = 3 up to n = 3).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .budget import DEFAULT_BUDGET, check_budget
from .fields import FieldSpec
from .linalg import Matrix, matrix, rank as matrix_rank
from .matroid import Matroid
from .rankcodes import RankMetricCode
from .subspaces import (
    Subspace,
    SubspaceLattice,
    full_space,
    orthogonal_complement,
    subspace_from_rows,
    subspace_lattice,
)


@dataclass(frozen=True)
class QMatroid:
    field: FieldSpec
    ambient: int
    rho: Callable[[Subspace], int]
    provenance: str

    @property
    def full_rank(self) -> int:
        return self.rho(full_space(self.field, self.ambient))

    def __repr__(self) -> str:
        return (
            f"QMatroid(n={self.ambient}, q={self.field.order}, "
            f"rho(E)={self.full_rank}, {self.provenance})"
        )


@dataclass(frozen=True)
class QSeparation:
    """A vertical t-separation: a complement pair with both ranks >= t and
    lambda_value = rho(A) + rho(V) - rho(E) < t."""

    A: Subspace
    V: Subspace
    t: int
    lambda_value: int


def _cached(fn: Callable[[Subspace], int]) -> Callable[[Subspace], int]:
    cache: dict[tuple[int, ...], int] = {}

    def wrapped(space: Subspace) -> int:
        key = space.key()
        if key not in cache:
            cache[key] = fn(space)
        return cache[key]

    return wrapped


def qmatroid_from_rank_code(code: RankMetricCode) -> QMatroid:
    """The q-matroid of a rank-metric code: rho(V) is the GF(q^m)-rank of
    G Y^T, with the rows of Y any basis of V.

    Base-field entries of Y are lifted into the extension as constants; the
    value does not depend on the basis choice because base changes multiply
    Y on the left by an invertible matrix.
    """
    ext = code.extension.ext
    g = code.generator

    def rho(space: Subspace) -> int:
        if space.dim == 0:
            return 0
        y = matrix(ext, space.basis.rows(), ncols=space.ambient)
        return matrix_rank(g.mul(y.transpose()))

    return QMatroid(code.extension.base, code.n, _cached(rho), "from-rank-code")


def uniform_qmatroid(k: int, n: int, field: FieldSpec) -> QMatroid:
    if not 0 <= k <= n:
        raise ValueError(f"uniform q-matroid needs 0 <= k <= n, got k={k}, n={n}")
    return QMatroid(field, n, lambda v: min(v.dim, k), "uniform")


def qmatroid_from_rank_table(
    field: FieldSpec, n: int, ranks: dict[str, int], *, budget: int = DEFAULT_BUDGET
) -> QMatroid:
    """Explicit q-matroid from a table keyed by serialized canonical bases
    (entries of the RREF basis joined by commas; the zero space keys as "")."""
    lattice = subspace_lattice(field, n, budget=budget)
    missing = [s for s in lattice.subspaces if serialize_subspace(s) not in ranks]
    if missing:
        raise ValueError(f"rank table is missing {len(missing)} subspaces")
    table = {s.key(): int(ranks[serialize_subspace(s)]) for s in lattice.subspaces}
    return QMatroid(field, n, lambda v: table[v.key()], "explicit-table")


def serialize_subspace(space: Subspace) -> str:
    return ",".join(str(e) for e in space.basis.entries)


def check_qmatroid_axioms(
    m: QMatroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[str]]:
    """Exhaustive verification of (qR1) rho(V) <= dim V, (qR2) monotonicity,
    (qR3) submodularity over the full subspace lattice."""
    lattice = subspace_lattice(m.field, m.ambient, budget=budget)
    size = lattice.size
    check_budget(size * size, budget, "subspace pairs of the ambient lattice")
    r = [m.rho(s) for s in lattice.subspaces]
    for i, s in enumerate(lattice.subspaces):
        if not 0 <= r[i] <= s.dim:
            return False, f"qR1 fails at V with basis {s.basis.rows()}: rho={r[i]}"
    for i in range(size):
        for j in range(size):
            if i != j and lattice.leq(i, j) and r[i] > r[j]:
                return False, (
                    f"qR2 fails at V={lattice.subspaces[i].basis.rows()} "
                    f"inside W={lattice.subspaces[j].basis.rows()}"
                )
    for i in range(size):
        for j in range(i, size):
            if r[lattice.meet(i, j)] + r[lattice.join(i, j)] > r[i] + r[j]:
                return False, (
                    f"qR3 fails at V={lattice.subspaces[i].basis.rows()}, "
                    f"W={lattice.subspaces[j].basis.rows()}"
                )
    return True, None


def q_dual(m: QMatroid, inner_product: Optional[Matrix] = None) -> QMatroid:
    """Dual rank rho*(X) = dim X - rho(E) + rho(X^perp), with the orthogonal
    complement taken for the standard dot product unless a nondegenerate
    Gram matrix is supplied."""
    r_e = m.full_rank

    def rho_star(space: Subspace) -> int:
        perp = orthogonal_complement(space, inner_product)
        return space.dim - r_e + m.rho(perp)

    return QMatroid(m.field, m.ambient, _cached(rho_star), "dual")


def q_circuits(m: QMatroid, *, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """Inclusion-minimal dependent subspaces, in canonical lattice order.

    Minimality needs only the maximal proper subspaces: any dependent proper
    subspace sits inside a dependent hyperplane of V, because the rank can
    grow by at most one per added dimension.
    """
    lattice = subspace_lattice(m.field, m.ambient, budget=budget)
    r = {s.key(): m.rho(s) for s in lattice.subspaces}
    by_dim: dict[int, list[Subspace]] = {}
    for s in lattice.subspaces:
        by_dim.setdefault(s.dim, []).append(s)
    out = []
    for s in lattice.subspaces:
        if r[s.key()] >= s.dim:
            continue
        i = lattice.locate(s)
        if all(
            r[h.key()] == s.dim - 1
            for h in by_dim.get(s.dim - 1, [])
            if lattice.leq(lattice.locate(h), i)
        ):
            out.append(s)
    return out


def has_disjoint_q_circuits(
    m: QMatroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[Subspace, Subspace]]]:
    """Whether two circuits intersect only in {0}; first such pair in
    circuit enumeration order."""
    circs = q_circuits(m, budget=budget)
    lattice = subspace_lattice(m.field, m.ambient, budget=budget)
    zero = lattice.locate_zero()
    idx = [lattice.locate(c) for c in circs]
    for i in range(len(circs)):
        for j in range(i + 1, len(circs)):
            if lattice.meet(idx[i], idx[j]) == zero:
                return True, (circs[i], circs[j])
    return False, None


def q_vertical_connectivity(
    m: QMatroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[int, Optional[QSeparation]]:
    """Least t admitting a vertical t-separation, with the first witness in
    canonical order (subspaces A, then complements V), or rho(E) with no
    witness when fully connected."""
    lattice = subspace_lattice(m.field, m.ambient, budget=budget)
    r_e = m.full_rank
    rho = {s.key(): m.rho(s) for s in lattice.subspaces}
    for t in range(1, r_e):
        for i, a in enumerate(lattice.subspaces):
            if rho[a.key()] < t:
                continue
            for j in lattice.complements_of(i):
                v = lattice.subspaces[j]
                lam = rho[a.key()] + rho[v.key()] - r_e
                if lam < t and rho[v.key()] >= t:
                    return t, QSeparation(a, v, t, lam)
    return r_e, None


def induced_classical_matroid(m: QMatroid, beta: Sequence[Sequence[int]]) -> Matroid:
    """Classical matroid on the ground set {0,..,n-1} whose rank of X is
    rho of the span of {beta_i : i in X}; beta must be an ordered basis of
    the ambient space."""
    rows = [tuple(v) for v in beta]
    if len(rows) != m.ambient or matrix_rank(matrix(m.field, rows, ncols=m.ambient)) != m.ambient:
        raise ValueError("beta is not a basis of the ambient space")
    cache: dict[int, int] = {}

    def r(mask: int) -> int:
        if mask not in cache:
            chosen = [rows[i] for i in range(m.ambient) if mask >> i & 1]
            cache[mask] = m.rho(subspace_from_rows(m.field, m.ambient, chosen))
        return cache[mask]

    return Matroid(m.ambient, r, "induced-from-q-matroid")


def adapted_basis_for_separation(
    m: QMatroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[tuple[int, ...], ...]:
    """Basis of the ambient space adapted to the first minimal vertical
    separation (A, V): a basis of A followed by a basis of V.  Raises when
    the q-matroid is fully connected and no separation exists."""
    kappa, sep = q_vertical_connectivity(m, budget=budget)
    if sep is None:
        raise ValueError(f"no vertical separation: the q-matroid is fully connected (kappa={kappa})")
    return sep.A.basis.rows() + sep.V.basis.rows()
