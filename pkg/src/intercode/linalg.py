"""Dense exact matrices over a FieldSpec.

Matrices are immutable: a flat tuple of element encodings in row-major order.
Everything here is deterministic; reduced row echelon form is the canonical
form used across the package (unique per row space).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import FieldSpec


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError(
                f"entry count {len(self.entries)} does not match shape "
                f"{self.nrows}x{self.ncols}"
            )

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(self.nrows))

    def transpose(self) -> Matrix:
        ent = tuple(
            self.entries[i * self.ncols + j]
            for j in range(self.ncols)
            for i in range(self.nrows)
        )
        return Matrix(self.field, self.ncols, self.nrows, ent)

    def mul(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise ValueError("matrix product over mismatched fields")
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        f = self.field
        out = []
        for i in range(self.nrows):
            ri = self.row(i)
            for j in range(other.ncols):
                acc = 0
                for t in range(self.ncols):
                    a = ri[t]
                    if a:
                        acc = f.add(acc, f.mul(a, other.entries[t * other.ncols + j]))
                out.append(acc)
        return Matrix(f, self.nrows, other.ncols, tuple(out))

    def stack(self, other: Matrix) -> Matrix:
        if self.field != other.field or self.ncols != other.ncols:
            raise ValueError("row stacking requires equal fields and widths")
        return Matrix(
            self.field, self.nrows + other.nrows, self.ncols, self.entries + other.entries
        )

    def take_columns(self, cols: Sequence[int]) -> Matrix:
        ent = tuple(self.entries[i * self.ncols + j] for i in range(self.nrows) for j in cols)
        return Matrix(self.field, self.nrows, len(cols), ent)

    def is_zero(self) -> bool:
        return not any(self.entries)


def matrix(field: FieldSpec, rows: Iterable[Iterable[int]], ncols: int | None = None) -> Matrix:
    """Build a matrix from an iterable of rows, validating entries.

    ``ncols`` is required only when there are no rows.
    """
    rws = [tuple(r) for r in rows]
    if rws:
        width = len(rws[0])
        if any(len(r) != width for r in rws):
            raise ValueError("ragged rows")
        if ncols is not None and ncols != width:
            raise ValueError(f"rows have width {width}, expected {ncols}")
    else:
        if ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        width = ncols
    flat = tuple(field.check_element(a) for r in rws for a in r)
    return Matrix(field, len(rws), width, flat)


def identity(field: FieldSpec, n: int) -> Matrix:
    return Matrix(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))


def zero_matrix(field: FieldSpec, nrows: int, ncols: int) -> Matrix:
    return Matrix(field, nrows, ncols, (0,) * (nrows * ncols))


def rref(mat: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Deterministic: pivots are chosen as the first nonzero entry scanning rows
    top-down within each column, columns left to right; pivot entries are
    normalized to 1 and eliminated above and below.
    """
    f = mat.field
    rows = [list(mat.row(i)) for i in range(mat.nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(mat.ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = f.inv(rows[r][c])
        if inv != 1:
            rows[r] = [f.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                coef = rows[i][c]
                ri, rr = rows[i], rows[r]
                for j in range(c, mat.ncols):
                    if rr[j]:
                        ri[j] = f.sub(ri[j], f.mul(coef, rr[j]))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    flat = tuple(a for row in rows for a in row)
    return Matrix(f, mat.nrows, mat.ncols, flat), tuple(pivots)


def rank(mat: Matrix) -> int:
    return len(rref(mat)[1])


def row_basis(mat: Matrix) -> Matrix:
    """RREF with zero rows dropped: the canonical basis of the row space."""
    red, pivots = rref(mat)
    k = len(pivots)
    return Matrix(mat.field, k, mat.ncols, red.entries[: k * mat.ncols])


def inverse(mat: Matrix) -> Matrix:
    """Inverse of a square matrix, via row reduction of [M | I]."""
    if mat.nrows != mat.ncols:
        raise ValueError(f"cannot invert a {mat.nrows}x{mat.ncols} matrix")
    n = mat.nrows
    aug_rows = [mat.row(i) + identity(mat.field, n).row(i) for i in range(n)]
    red, pivots = rref(Matrix(mat.field, n, 2 * n, tuple(a for r in aug_rows for a in r)))
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(mat.field, n, n, tuple(red.at(i, j) for i in range(n) for j in range(n, 2 * n)))


def right_nullspace(mat: Matrix) -> Matrix:
    """Basis (as rows) of {v : mat . v^T = 0}, one row per free column."""
    f = mat.field
    red, pivots = rref(mat)
    pivot_set = set(pivots)
    free = [j for j in range(mat.ncols) if j not in pivot_set]
    rows = []
    for j in free:
        v = [0] * mat.ncols
        v[j] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red.at(i, j))
        rows.append(tuple(v))
    return Matrix(f, len(rows), mat.ncols, tuple(a for r in rows for a in r))


def vec_mat_mul(field: FieldSpec, vec: Sequence[int], mat: Matrix) -> tuple[int, ...]:
    """Row vector times matrix."""
    if len(vec) != mat.nrows:
        raise ValueError(f"vector length {len(vec)} does not match {mat.nrows} rows")
    out = [0] * mat.ncols
    for i, a in enumerate(vec):
        if a:
            base = i * mat.ncols
            for j in range(mat.ncols):
                b = mat.entries[base + j]
                if b:
                    out[j] = field.add(out[j], field.mul(a, b))
    return tuple(out)


def dot(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("dot product of vectors with different lengths")
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc
