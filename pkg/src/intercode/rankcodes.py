"""Vector rank-metric codes over GF(q^m), with base field GF(q) = GF(p).

A codeword v in GF(q^m)^n expands, entry by entry, into coordinates over a
chosen basis of GF(q^m) as a GF(q) vector space.  The expansion matrix has
one row per entry of v (n rows, m columns); its column space is a subspace
of GF(q)^n, the rank support, whose dimension is the rank weight.  Rank
supports are invariant under nonzero GF(q^m) scaling, so pairwise checks run
over one representative per projective point, exactly as in the Hamming
module.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .budget import DEFAULT_BUDGET, check_budget
from .fields import FieldSpec, field_make
from .linalg import Matrix, inverse, matrix, rank, vec_mat_mul
from .subspaces import Subspace, subspace_from_rows, subspace_intersection, subspace_le

Word = tuple[int, ...]


@dataclass(frozen=True)
class ExtensionSpec:
    """GF(q^m) as a vector space over GF(q), with a designated basis.

    Only prime base fields are supported: the extension is then GF(p^m) with
    its default modulus, and element encodings double as coefficient vectors
    over the base.  The default basis is the polynomial basis 1, x, ...,
    x^(m-1), whose encodings are the powers of p.
    """

    base: FieldSpec
    degree: int
    basis: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.base.m != 1:
            raise ValueError("only prime base fields are supported")
        if self.degree < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.degree}")
        if not self.basis:
            object.__setattr__(
                self, "basis", tuple(self.base.p**j for j in range(self.degree))
            )
        if len(self.basis) != self.degree:
            raise ValueError(f"basis needs {self.degree} elements, got {len(self.basis)}")
        if rank(self._basis_matrix()) != self.degree:
            raise ValueError("basis elements are linearly dependent over the base field")

    @property
    def ext(self) -> FieldSpec:
        return field_make(self.base.p, self.degree)

    def _basis_matrix(self) -> Matrix:
        rows = [self.ext.digits(g) for g in self.basis]
        return matrix(self.base, rows, ncols=self.degree)

    def coordinates(self, a: int) -> tuple[int, ...]:
        """Coefficients of an extension element over the designated basis."""
        return vec_mat_mul(self.base, self.ext.digits(a), inverse(self._basis_matrix()))


def expansion_matrix(v: Sequence[int], extension: ExtensionSpec) -> Matrix:
    """n x m matrix over the base field; row i holds the basis coordinates
    of entry v_i."""
    rows = [extension.coordinates(extension.ext.check_element(a)) for a in v]
    return matrix(extension.base, rows, ncols=extension.degree)


def rank_support(v: Sequence[int], extension: ExtensionSpec) -> Subspace:
    """Column space of the expansion matrix, a subspace of GF(q)^n."""
    gamma = expansion_matrix(v, extension)
    return subspace_from_rows(extension.base, len(v), gamma.transpose().rows())


def rank_weight(v: Sequence[int], extension: ExtensionSpec) -> int:
    return rank_support(v, extension).dim


@dataclass(frozen=True)
class RankMetricCode:
    """A k-dimensional GF(q^m)-linear subspace of GF(q^m)^n."""

    extension: ExtensionSpec
    n: int
    k: int
    generator: Matrix

    def __post_init__(self) -> None:
        g = self.generator
        if g.field != self.extension.ext:
            raise ValueError("generator entries must live in the extension field")
        if g.nrows != self.k or g.ncols != self.n:
            raise ValueError(f"generator is {g.nrows}x{g.ncols}, expected {self.k}x{self.n}")
        if rank(g) != self.k:
            raise ValueError("generator matrix is not full rank")

    def __repr__(self) -> str:
        e = self.extension
        return f"RankMetricCode([{self.n},{self.k}] over GF({e.base.p}^{e.degree}))"


def rank_code_from_generator(
    extension: ExtensionSpec, rows: Sequence[Sequence[int]]
) -> RankMetricCode:
    if not rows:
        raise ValueError("empty generator")
    g = matrix(extension.ext, rows)
    return RankMetricCode(extension, g.ncols, g.nrows, g)


def rank_codewords_projective(
    code: RankMetricCode, *, budget: int = DEFAULT_BUDGET
) -> list[Word]:
    """One codeword per GF(q^m)-projective point of the code, first nonzero
    entry normalized to 1, in lexicographic encoding order."""
    f = code.extension.ext
    total = f.order**code.k
    check_budget(total, budget, f"codewords of a [{code.n},{code.k}] rank-metric code")
    reps = set()
    for msg in itertools.product(f.elements(), repeat=code.k):
        w = vec_mat_mul(f, msg, code.generator)
        lead = next((a for a in w if a), 0)
        if not lead:
            continue
        inv = f.inv(lead)
        reps.add(tuple(f.mul(inv, a) for a in w))
    out = sorted(reps)
    assert len(out) == (total - 1) // (f.order - 1)
    return out


def min_rank_distance(code: RankMetricCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """Least rank weight of a nonzero codeword."""
    return min(
        rank_weight(w, code.extension)
        for w in rank_codewords_projective(code, budget=budget)
    )


def is_intersecting_rank(
    code: RankMetricCode, *, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[Word, Word]]]:
    """True when every pair of nonzero codewords has rank supports meeting
    beyond {0}; otherwise the first violating representative pair."""
    reps = rank_codewords_projective(code, budget=budget)
    sups = [rank_support(w, code.extension) for w in reps]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if subspace_intersection(sups[i], sups[j]).dim == 0:
                return False, (reps[i], reps[j])
    return True, None


def is_minimal_rank_codeword(
    code: RankMetricCode, v: Sequence[int], *, budget: int = DEFAULT_BUDGET
) -> bool:
    """Whether every codeword with rank support inside that of v is a
    GF(q^m)-multiple of v."""
    if not any(v):
        raise ValueError("minimality is only defined for nonzero codewords")
    f = code.extension.ext
    sv = rank_support(v, code.extension)
    lead = next(a for a in v if a)
    inv = f.inv(lead)
    v_rep = tuple(f.mul(inv, a) for a in v)
    for w in rank_codewords_projective(code, budget=budget):
        if w != v_rep and subspace_le(rank_support(w, code.extension), sv):
            return False
    return True


def rank_minimal_supports(
    code: RankMetricCode, *, budget: int = DEFAULT_BUDGET
) -> list[Subspace]:
    """Rank supports of the minimal codewords, deduplicated and in canonical
    order."""
    reps = rank_codewords_projective(code, budget=budget)
    sups = [rank_support(w, code.extension) for w in reps]
    out = {}
    for i in range(len(reps)):
        if all(j == i or not subspace_le(sups[j], sups[i]) for j in range(len(reps))):
            out[sups[i].key()] = sups[i]
    return [out[k] for k in sorted(out)]
