"""Subspaces of GF(q)^n and the lattice operations on them.

A Subspace is stored as its reduced-row-echelon basis with zero rows dropped,
which is unique per subspace, so equality of Subspace values is equality of
subspaces.  Enumeration helpers visit each subspace exactly once in canonical
order: ascending lexicographic order of the flattened canonical basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .budget import DEFAULT_BUDGET, check_budget
from .fields import FieldSpec
from .linalg import Matrix, matrix, rank, right_nullspace, row_basis, rref, vec_mat_mul


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n (product formula)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient: int
    basis: Matrix  # reduced row echelon form, no zero rows

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def key(self) -> tuple[int, ...]:
        """Canonical sort key: the flattened canonical basis."""
        return self.basis.entries

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, rows={self.basis.rows()})"


def subspace_from_rows(
    field: FieldSpec, ambient: int, rows: Sequence[Sequence[int]]
) -> Subspace:
    mat = matrix(field, rows, ncols=ambient)
    return Subspace(field, ambient, row_basis(mat))


def subspace_from_matrix(mat: Matrix) -> Subspace:
    return Subspace(mat.field, mat.ncols, row_basis(mat))


def zero_subspace(field: FieldSpec, ambient: int) -> Subspace:
    return Subspace(field, ambient, Matrix(field, 0, ambient, ()))


def full_space(field: FieldSpec, ambient: int) -> Subspace:
    from .linalg import identity

    return Subspace(field, ambient, identity(field, ambient))


def reduce_vector(space: Subspace, v: Sequence[int]) -> tuple[int, ...]:
    """Residue of v after elimination against the canonical basis."""
    f = space.field
    if len(v) != space.ambient:
        raise ValueError(f"vector length {len(v)} does not match ambient {space.ambient}")
    w = [f.check_element(a) for a in v]
    b = space.basis
    for i in range(b.nrows):
        # canonical basis rows have pivot entry 1 at their leading column
        lead = next(j for j in range(b.ncols) if b.at(i, j))
        if w[lead]:
            c = w[lead]
            for j in range(lead, space.ambient):
                e = b.at(i, j)
                if e:
                    w[j] = f.sub(w[j], f.mul(c, e))
    return tuple(w)


def subspace_contains(space: Subspace, v: Sequence[int]) -> bool:
    return not any(reduce_vector(space, v))


def subspace_le(inner: Subspace, outer: Subspace) -> bool:
    """Whether inner is a subspace of outer."""
    return all(subspace_contains(outer, inner.basis.row(i)) for i in range(inner.dim))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_same_ambient(u, v)
    return Subspace(u.field, u.ambient, row_basis(u.basis.stack(v.basis)))


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: row reduce [U|U; V|0]; rows with zero left half carry a
    basis of the intersection in their right half."""
    _check_same_ambient(u, v)
    f, n = u.field, u.ambient
    rows = []
    for i in range(u.dim):
        r = u.basis.row(i)
        rows.append(r + r)
    for i in range(v.dim):
        rows.append(v.basis.row(i) + (0,) * n)
    red, pivots = rref(matrix(f, rows, ncols=2 * n))
    inter_rows = []
    for i in range(len(pivots)):
        row = red.row(i)
        if not any(row[:n]):
            inter_rows.append(row[n:])
    return subspace_from_rows(f, n, inter_rows)


def is_complement_pair(u: Subspace, v: Subspace) -> bool:
    """Whether the ambient space is the direct sum of u and v."""
    _check_same_ambient(u, v)
    if u.dim + v.dim != u.ambient:
        return False
    return rank(u.basis.stack(v.basis)) == u.ambient


def orthogonal_complement(space: Subspace, form: Matrix | None = None) -> Subspace:
    """Orthogonal complement with respect to a nondegenerate bilinear form
    (default: the standard dot product)."""
    f, n = space.field, space.ambient
    if space.dim == 0:
        return full_space(f, n)
    b = space.basis
    if form is not None:
        if form.nrows != n or form.ncols != n:
            raise ValueError(f"form must be {n}x{n}")
        if rank(form) != n:
            raise ValueError("bilinear form is degenerate")
        b = b.mul(form)
    return Subspace(f, n, row_basis(right_nullspace(b)))


def subspace_vectors(space: Subspace) -> Iterator[tuple[int, ...]]:
    """All q^dim vectors, in ascending order of the coefficient word applied
    to the canonical basis."""
    f = space.field
    for coeffs in itertools.product(f.elements(), repeat=space.dim):
        yield vec_mat_mul(f, coeffs, space.basis)


def _check_same_ambient(u: Subspace, v: Subspace) -> None:
    if u.field != v.field or u.ambient != v.ambient:
        raise ValueError("subspaces live in different ambient spaces")


def _echelon_bases(
    field: FieldSpec, ambient: int, dim: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All RREF bases with dim rows, grouped by pivot pattern."""
    nonpivot_values = range(field.order)
    for pivots in itertools.combinations(range(ambient), dim):
        pivot_set = set(pivots)
        free_slots = [
            (i, j)
            for i in range(dim)
            for j in range(pivots[i] + 1, ambient)
            if j not in pivot_set
        ]
        for values in itertools.product(nonpivot_values, repeat=len(free_slots)):
            rows = [[0] * ambient for _ in range(dim)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), val in zip(free_slots, values):
                rows[i][j] = val
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(
    field: FieldSpec,
    ambient: int,
    dim: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> list[Subspace]:
    """Every subspace of GF(q)^ambient (optionally of one dimension), each
    exactly once, sorted by canonical basis."""
    q = field.order
    dims = range(ambient + 1) if dim is None else [dim]
    if dim is not None and not 0 <= dim <= ambient:
        raise ValueError(f"dimension {dim} out of range for ambient {ambient}")
    total = sum(gaussian_binomial(ambient, d, q) for d in dims)
    check_budget(total, budget, f"subspaces of GF({q})^{ambient}")
    out: list[Subspace] = []
    for d in dims:
        for rows in _echelon_bases(field, ambient, d):
            out.append(Subspace(field, ambient, matrix(field, rows, ncols=ambient)))
    out.sort(key=Subspace.key)
    return out


def enumerate_complements(space: Subspace, *, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """All complements of the given subspace, sorted canonically.

    There are exactly q^(k(n-k)) of them: starting from the coordinate
    complement spanned by the non-pivot unit vectors, every complement is its
    graph under a linear map into the subspace.
    """
    f, n, k = space.field, space.ambient, space.dim
    q = f.order
    count = q ** (k * (n - k))
    check_budget(count, budget, "complements of a subspace")
    red, pivots = rref(space.basis)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    out = []
    for flat in itertools.product(f.elements(), repeat=k * (n - k)):
        rows = []
        for r, j in enumerate(free):
            coeffs = flat[r * k : (r + 1) * k]
            vec = list(vec_mat_mul(f, coeffs, space.basis)) if k else [0] * n
            vec[j] = f.add(vec[j], 1)
            rows.append(vec)
        out.append(subspace_from_rows(f, n, rows))
    out.sort(key=Subspace.key)
    return out


class SubspaceLattice:
    """The full lattice of subspaces of GF(q)^n with O(1) meets and joins.

    Each subspace is identified with the set of its vectors, packed into a
    bitmask indexed by vector encoding, so meet is bitwise AND and join is
    computed through orthogonal complements.  Built once per (field, n) and
    shared; only sensible for small lattices.
    """

    def __init__(self, field: FieldSpec, ambient: int, *, budget: int = DEFAULT_BUDGET):
        check_budget(field.order**ambient, budget, f"vectors of GF({field.order})^{ambient}")
        self.field = field
        self.ambient = ambient
        self.subspaces = enumerate_subspaces(field, ambient, budget=budget)
        self.size = len(self.subspaces)
        self.index = {s.key(): i for i, s in enumerate(self.subspaces)}
        self.dims = [s.dim for s in self.subspaces]
        q = field.order
        self._vec_index = {}
        for t, vec in enumerate(itertools.product(field.elements(), repeat=ambient)):
            self._vec_index[vec] = t
        masks = []
        for s in self.subspaces:
            m = 0
            for vec in subspace_vectors(s):
                m |= 1 << self._vec_index[vec]
            masks.append(m)
        self.masks = masks
        self._mask_index = {m: i for i, m in enumerate(masks)}
        self.orth = [self.locate(orthogonal_complement(s)) for s in self.subspaces]
        self._complements: dict[int, tuple[int, ...]] = {}

    def locate(self, space: Subspace) -> int:
        return self.index[space.key()]

    def locate_zero(self) -> int:
        return self.index[()]

    def meet(self, i: int, j: int) -> int:
        return self._mask_index[self.masks[i] & self.masks[j]]

    def join(self, i: int, j: int) -> int:
        # U + V = (U^perp  intersect  V^perp)^perp for the standard form
        return self.orth[self.meet(self.orth[i], self.orth[j])]

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def complements_of(self, i: int, *, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
        got = self._complements.get(i)
        if got is None:
            comps = enumerate_complements(self.subspaces[i], budget=budget)
            got = tuple(self.locate(c) for c in comps)
            self._complements[i] = got
        return got


_LATTICE_CACHE: dict[tuple[FieldSpec, int], SubspaceLattice] = {}


def subspace_lattice(
    field: FieldSpec, ambient: int, *, budget: int = DEFAULT_BUDGET
) -> SubspaceLattice:
    key = (field, ambient)
    lat = _LATTICE_CACHE.get(key)
    if lat is None:
        lat = SubspaceLattice(field, ambient, budget=budget)
        _LATTICE_CACHE[key] = lat
    return lat
