"""Classical matroids given by rank oracles on subsets of {0,..,n-1}.

Subsets travel as bitmasks internally (n is capped well below word size) and
as sorted index tuples at the API surface.  Matroids remember where they came
from ("representable-from-matrix", "uniform", "explicit-table"); the tag is
only informational.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .budget import DEFAULT_BUDGET, check_budget
from .codes import LinearCode
from .linalg import Matrix, matrix, rank as matrix_rank, right_nullspace

MAX_GROUND = 32
SubsetLike = Union[int, Iterable[int]]


def _as_mask(x: SubsetLike, n: int) -> int:
    if isinstance(x, int):
        mask = x
    else:
        mask = 0
        for i in x:
            if not 0 <= i < n:
                raise ValueError(f"element {i} outside ground set of size {n}")
            mask |= 1 << i
    if mask < 0 or mask >= 1 << n:
        raise ValueError(f"subset mask {mask} outside ground set of size {n}")
    return mask


def _as_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Matroid:
    n: int
    rank_mask: Callable[[int], int]
    provenance: str

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground set size {self.n} exceeds the cap of {MAX_GROUND}")

    def rank(self, subset: SubsetLike) -> int:
        return self.rank_mask(_as_mask(subset, self.n))

    @property
    def full_rank(self) -> int:
        return self.rank_mask((1 << self.n) - 1)

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.full_rank}, {self.provenance})"


@dataclass(frozen=True)
class Separation:
    """A vertical t-separation witness (X, X^c)."""

    X: tuple[int, ...]
    t: int
    lambda_value: int


def matroid_from_code(code: LinearCode) -> Matroid:
    """Column matroid of the generator: r(A) = rank of the column submatrix.

    Depends only on the code, not the presentation, since row operations
    preserve column ranks.
    """
    g = code.generator
    cache: dict[int, int] = {0: 0}

    def r(mask: int) -> int:
        if mask not in cache:
            cache[mask] = matrix_rank(g.take_columns(_as_tuple(mask)))
        return cache[mask]

    return Matroid(code.n, r, "representable-from-matrix")


def uniform_matroid(k: int, n: int) -> Matroid:
    if not 0 <= k <= n:
        raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return Matroid(n, lambda mask: min(int.bit_count(mask), k), "uniform")


def matroid_from_rank_table(n: int, ranks: Sequence[int]) -> Matroid:
    """Explicit matroid from a table of 2^n ranks indexed by subset bitmask."""
    if n > MAX_GROUND:
        raise ValueError(f"ground set size {n} exceeds the supported maximum {MAX_GROUND}")
    if len(ranks) != 1 << n:
        raise ValueError(f"rank table has {len(ranks)} entries, expected {1 << n}")
    table = tuple(int(r) for r in ranks)
    return Matroid(n, lambda mask: table[mask], "explicit-table")


def dual_rank(m: Matroid, subset: SubsetLike) -> int:
    """r*(X) = |X| - r(E) + r(X^c)."""
    full = (1 << m.n) - 1
    mask = _as_mask(subset, m.n)
    return int.bit_count(mask) - m.full_rank + m.rank_mask(full ^ mask)


def dual_matroid(m: Matroid) -> Matroid:
    full = (1 << m.n) - 1
    r_e = m.full_rank
    return Matroid(
        m.n,
        lambda mask: int.bit_count(mask) - r_e + m.rank_mask(full ^ mask),
        m.provenance,
    )


def connectivity_lambda(m: Matroid, subset: SubsetLike) -> int:
    """lambda(X) = r(X) + r(X^c) - r(E); symmetric and non-negative."""
    full = (1 << m.n) - 1
    mask = _as_mask(subset, m.n)
    return m.rank_mask(mask) + m.rank_mask(full ^ mask) - m.full_rank


def circuits(m: Matroid, *, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All minimal dependent subsets, in ascending bitmask order.

    Minimality needs only single-element deletions: a proper subset of a
    dependent set that is itself dependent contains a dependent set one
    element smaller.
    """
    check_budget(1 << m.n, budget, f"subsets of a {m.n}-element ground set")
    out = []
    for mask in range(1, 1 << m.n):
        size = int.bit_count(mask)
        if m.rank_mask(mask) >= size:
            continue
        if all(
            m.rank_mask(mask ^ (1 << i)) == size - 1
            for i in range(m.n)
            if mask >> i & 1
        ):
            out.append(_as_tuple(mask))
    return out


def cocircuits(m: Matroid, *, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    return circuits(dual_matroid(m), budget=budget)


def has_disjoint_cocircuits(
    m: Matroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Look for two cocircuits with empty intersection; first pair in the
    cocircuit enumeration order wins."""
    cocs = cocircuits(m, budget=budget)
    sets = [frozenset(c) for c in cocs]
    for i in range(len(cocs)):
        for j in range(i + 1, len(cocs)):
            if not sets[i] & sets[j]:
                return True, (cocs[i], cocs[j])
    return False, None


def vertical_connectivity(
    m: Matroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[int, Optional[Separation]]:
    """The least t admitting a vertical t-separation, with its witness, or
    r(E) with no witness when no separation exists.

    For each candidate t the scan visits each split (X, X^c) once, keyed by
    the side containing element 0, in ascending bitmask order; the first hit
    is the reported witness, so results are reproducible.
    """
    check_budget(1 << m.n, budget, f"subsets of a {m.n}-element ground set")
    full = (1 << m.n) - 1
    r_e = m.full_rank
    for t in range(1, r_e):
        for mask in range(1, full, 2):
            lam = m.rank_mask(mask) + m.rank_mask(full ^ mask) - r_e
            if lam < t and m.rank_mask(mask) >= t and m.rank_mask(full ^ mask) >= t:
                return t, Separation(_as_tuple(mask), t, lam)
    return r_e, None


def block_decomposition(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET
) -> Optional[tuple[tuple[int, ...], Matrix, Matrix, Matrix]]:
    """Permute columns and re-present the generator in block form when the
    column matroid has vertical connectivity t < k.

    Returns (perm, G1, G2, B) where perm lists original column indices in
    their new order (the separating set A first), rows (G1 | 0) span the
    codewords supported inside A, rows (0 | G2) span those supported in the
    complement, and B holds the remaining t-1 rows.  Returns None when the
    code is intersecting (kappa = k) and no such shape exists.
    """
    kappa, sep = vertical_connectivity(matroid_from_code(code), budget=budget)
    if sep is None or kappa >= code.k:
        return None
    f = code.field
    n, k, g = code.n, code.k, code.generator
    a_cols = list(sep.X)
    b_cols = [j for j in range(n) if j not in sep.X]
    # messages sending the generator into coordinates A are the left kernel
    # of the complementary column block, and vice versa
    u1 = right_nullspace(g.take_columns(b_cols).transpose())
    u2 = right_nullspace(g.take_columns(a_cols).transpose())
    span = u1.stack(u2)
    rows = list(span.rows())
    have = matrix_rank(span)
    for i in range(k):
        if have == k:
            break
        e_i = tuple(1 if j == i else 0 for j in range(k))
        candidate = matrix(f, rows + [e_i], ncols=k)
        if matrix_rank(candidate) > have:
            rows.append(e_i)
            have += 1
    extra = matrix(f, rows[span.nrows :], ncols=k)
    perm = tuple(a_cols + b_cols)
    permuted = g.take_columns(perm)
    top = u1.mul(permuted)
    mid = u2.mul(permuted)
    na = len(a_cols)
    assert all(v == 0 for r in top.rows() for v in r[na:])
    assert all(v == 0 for r in mid.rows() for v in r[:na])
    g1 = top.take_columns(range(na))
    g2 = mid.take_columns(range(na, n))
    b = extra.mul(permuted)
    assert b.nrows == kappa - 1
    return perm, g1, g2, b


def check_matroid_axioms(
    m: Matroid, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[str]]:
    """Exhaustively verify (R1) boundedness, (R2) monotonicity, (R3)
    submodularity.  Returns (False, message naming the axiom) on the first
    violation in scan order.  Capped at n = 10 ground elements."""
    if m.n > 10:
        raise ValueError(f"axiom check supports n <= 10, got n = {m.n}")
    check_budget(1 << m.n, budget, f"subsets of a {m.n}-element ground set")
    size = 1 << m.n
    r = [m.rank_mask(mask) for mask in range(size)]
    for mask in range(size):
        if not 0 <= r[mask] <= int.bit_count(mask):
            return False, f"R1 fails at X={_as_tuple(mask)}: r={r[mask]}"
    for a in range(size):
        for i in range(m.n):
            if not a >> i & 1 and r[a] > r[a | 1 << i]:
                return False, (
                    f"R2 fails at X={_as_tuple(a)} within Y={_as_tuple(a | 1 << i)}"
                )
    for a in range(size):
        for b in range(size):
            if r[a | b] + r[a & b] > r[a] + r[b]:
                return False, f"R3 fails at X={_as_tuple(a)}, Y={_as_tuple(b)}"
    return True, None
