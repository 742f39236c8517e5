"""Linear codes in the Hamming metric: supports, weights, minimality,
and the t-intersecting decision with explicit witnesses.

Everything here runs on full codeword enumeration.  That is deliberate: the
point of this package is to certify small examples exactly, so enumeration is
the ground truth and there are no shortcut code paths to diverge from it.
Pairwise checks walk projective representatives (one codeword per 1-dimensional
subspace), which is sound because Hamming supports are invariant under nonzero
scaling.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .budget import DEFAULT_BUDGET, check_budget
from .fields import FieldSpec
from .linalg import Matrix, matrix, rank, row_basis, vec_mat_mul

Word = tuple[int, ...]


def support(v: Sequence[int]) -> frozenset[int]:
    """Indices of the nonzero coordinates of v (0-based)."""
    return frozenset(i for i, a in enumerate(v) if a)


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


@dataclass(frozen=True)
class LinearCode:
    """A k-dimensional subspace of GF(q)^n, presented by a full-rank generator.

    The generator matrix is kept exactly as given (tests care about specific
    presentations); use :func:`code_from_rows` to build a code from a spanning
    set that may be redundant.
    """

    field: FieldSpec
    n: int
    k: int
    generator: Matrix

    def __post_init__(self) -> None:
        g = self.generator
        if g.nrows != self.k or g.ncols != self.n:
            raise ValueError(f"generator is {g.nrows}x{g.ncols}, expected {self.k}x{self.n}")
        if rank(g) != self.k:
            raise ValueError("generator matrix is not full rank")

    @property
    def q(self) -> int:
        return self.field.order

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


def code_from_generator(field: FieldSpec, rows: Sequence[Sequence[int]]) -> LinearCode:
    """Build a code from generator rows, which must be linearly independent."""
    if not rows:
        raise ValueError("cannot infer length from an empty generator; use zero_code")
    g = matrix(field, rows)
    return LinearCode(field, g.ncols, g.nrows, g)


def code_from_rows(field: FieldSpec, ambient: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    """Build the code spanned by arbitrary rows, dropping dependencies."""
    g = row_basis(matrix(field, rows, ncols=ambient))
    return LinearCode(field, ambient, g.nrows, g)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, 0, Matrix(field, 0, n, ()))


def codewords(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """All q^k codewords, zero included, in lexicographic message order."""
    check_budget(code.q**code.k, budget, f"codewords of a [{code.n},{code.k}]_{code.q} code")
    f = code.field
    for msg in itertools.product(f.elements(), repeat=code.k):
        yield vec_mat_mul(f, msg, code.generator)


def codewords_projective(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> list[Word]:
    """One representative per 1-dimensional subspace of the code.

    Representatives are normalized so the first nonzero coordinate is 1 and
    returned in lexicographic order; there are (q^k - 1)/(q - 1) of them.
    """
    f = code.field
    reps = set()
    for w in codewords(code, budget=budget):
        lead = next((a for a in w if a), 0)
        if not lead:
            continue
        inv = f.inv(lead)
        reps.add(tuple(f.mul(inv, a) for a in w))
    out = sorted(reps)
    assert len(out) == (code.q**code.k - 1) // (code.q - 1)
    return out


def weight_distribution(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> list[int]:
    """W_0..W_n by full enumeration; W_0 = 1 and the entries sum to q^k."""
    dist = [0] * (code.n + 1)
    for w in codewords(code, budget=budget):
        dist[weight(w)] += 1
    return dist


def minimum_distance(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """Least nonzero codeword weight; n+1 for the zero code by convention."""
    if code.k == 0:
        return code.n + 1
    return min(weight(w) for w in codewords(code, budget=budget) if any(w))


def is_mds(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> bool:
    return minimum_distance(code, budget=budget) == code.n - code.k + 1


def is_t_intersecting(
    code: LinearCode, t: int, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[Word, Word]]]:
    """Decide whether every pair of nonzero codewords shares >= t support positions.

    The scan covers unordered pairs of projective representatives, with the
    diagonal pair (v, v) contributing the weight condition w(v) >= t.  On
    failure the first violating pair in that order is returned.
    """
    if t < 1:
        raise ValueError("intersection degree t must be >= 1")
    reps = codewords_projective(code, budget=budget)
    sups = [support(w) for w in reps]
    for i in range(len(reps)):
        if len(sups[i]) < t:
            return False, (reps[i], reps[i])
        for j in range(i + 1, len(reps)):
            if len(sups[i] & sups[j]) < t:
                return False, (reps[i], reps[j])
    return True, None


def intersecting_degree(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """The largest t with the code t-intersecting, or 0 if pairwise-disjoint
    supports exist.

    Equals the minimum of |support(v) ∩ support(w)| over codeword pairs,
    diagonal included.  The zero code has no nonzero pairs and is vacuously
    t-intersecting for every t; it gets the sentinel n+1, mirroring its
    minimum distance.
    """
    if code.k == 0:
        return code.n + 1
    reps = codewords_projective(code, budget=budget)
    sups = [support(w) for w in reps]
    degree = min(len(s) for s in sups)
    for s, u in itertools.combinations(sups, 2):
        degree = min(degree, len(s & u))
        if degree == 0:
            break
    return degree


def is_minimal_codeword(code: LinearCode, v: Sequence[int], *, budget: int = DEFAULT_BUDGET) -> bool:
    """True when every codeword whose support fits inside support(v) is a
    scalar multiple of v.  Undefined (rejected) for the zero vector."""
    if not any(v):
        raise ValueError("minimality is only defined for nonzero codewords")
    f = code.field
    sv = support(v)
    lead = next(i for i, a in enumerate(v) if a)
    inv = f.inv(v[lead])
    v_rep = tuple(f.mul(inv, a) for a in v)
    for w in codewords_projective(code, budget=budget):
        if w != v_rep and support(w) <= sv:
            return False
    return True


def is_minimal_code(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[Word, Word]]]:
    """A code is minimal when all its nonzero codewords are minimal.

    The witness on failure is the first pair (v, w) of representatives, in
    lexicographic scan order, with support(w) contained in support(v) and w
    not proportional to v.
    """
    reps = codewords_projective(code, budget=budget)
    sups = [support(w) for w in reps]
    for i, v in enumerate(reps):
        for j, w in enumerate(reps):
            if i != j and sups[j] <= sups[i]:
                return False, (v, w)
    return True, None


def random_code(n: int, k: int, field: FieldSpec, seed: int) -> LinearCode:
    """A uniformly random [n,k] code: i.i.d. uniform generator entries,
    resampled until full rank.  Deterministic under the seed."""
    return random_code_stream(n, k, field, random.Random(seed))


def random_code_stream(n: int, k: int, field: FieldSpec, rng: random.Random) -> LinearCode:
    """Draw the next random code from an existing RNG stream."""
    if k > n:
        raise ValueError(f"dimension {k} exceeds length {n}")
    q = field.order
    while True:
        entries = tuple(rng.randrange(q) for _ in range(k * n))
        g = Matrix(field, k, n, entries)
        if rank(g) == k:
            return LinearCode(field, n, k, g)


def enumerate_codes(
    n: int, k: int, field: FieldSpec, *, budget: int = DEFAULT_BUDGET
) -> Iterator[LinearCode]:
    """Every [n,k] code over the field exactly once, presented by its canonical
    RREF generator, in lexicographic order of the flattened generator."""
    from .subspaces import enumerate_subspaces

    for s in enumerate_subspaces(field, n, k, budget=budget):
        yield LinearCode(field, n, k, s.basis)


@dataclass(frozen=True)
class CodeReport:
    """Everything the analyzer measures about one code."""

    n: int
    k: int
    q: int
    d: int
    weight_distribution: tuple[int, ...]
    is_mds: bool
    intersecting_degree: int
    is_minimal: bool
    non_intersecting_witness: Optional[tuple[Word, Word]]
    non_minimal_witness: Optional[tuple[Word, Word]]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "d": self.d,
            "weight_distribution": list(self.weight_distribution),
            "is_mds": self.is_mds,
            "intersecting_degree": self.intersecting_degree,
            "is_minimal": self.is_minimal,
            "non_intersecting_witness": _witness_json(self.non_intersecting_witness),
            "non_minimal_witness": _witness_json(self.non_minimal_witness),
        }


def _witness_json(w: Optional[tuple[Word, Word]]):
    return [list(w[0]), list(w[1])] if w is not None else None


def analyze_code(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> CodeReport:
    dist = weight_distribution(code, budget=budget)
    d = next((i for i in range(1, code.n + 1) if dist[i]), code.n + 1)
    degree = intersecting_degree(code, budget=budget)
    _, inter_wit = is_t_intersecting(code, 1, budget=budget)
    minimal, min_wit = is_minimal_code(code, budget=budget)
    return CodeReport(
        n=code.n,
        k=code.k,
        q=code.q,
        d=d,
        weight_distribution=tuple(dist),
        is_mds=(d == code.n - code.k + 1),
        intersecting_degree=degree,
        is_minimal=minimal,
        non_intersecting_witness=inter_wit,
        non_minimal_witness=min_wit,
    )
