"""Numeric bounds for intersecting and minimal codes, the exact extremal
search for the shortest intersecting code of a given dimension, and the
Monte Carlo density experiment.

All bound arithmetic is exact: integers and fractions.Fraction throughout,
never floats.  The extremal search enumerates canonical RREF generators so
each code is visited exactly once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from typing import Optional, Sequence

from .budget import DEFAULT_BUDGET, check_budget
from .codes import LinearCode, enumerate_codes, is_t_intersecting, random_code_stream
from .fields import FieldSpec, field_from_order
from .subspaces import gaussian_binomial
from .workers import ordered_map


@dataclass(frozen=True)
class CodeParams:
    """Parameters [n, k, d]_q with an optional intersecting degree t."""

    n: int
    k: int
    d: int
    q: int
    t: Optional[int] = None

    def __post_init__(self) -> None:
        field_from_order(self.q)  # validates q is a prime power
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.d <= self.n + 1:
            raise ValueError(f"need 1 <= d <= n+1, got d={self.d}, n={self.n}")
        if self.t is not None and self.t < 1:
            raise ValueError(f"intersecting degree must be >= 1, got {self.t}")


@dataclass(frozen=True)
class BoundReport:
    name: str
    applicable: bool
    value: Fraction
    satisfied: Optional[bool]

    def to_dict(self) -> dict:
        v = self.value
        return {
            "name": self.name,
            "applicable": self.applicable,
            "value": int(v) if v.denominator == 1 else str(v),
            "satisfied": self.satisfied,
        }


def singleton(params: CodeParams) -> BoundReport:
    """d <= n - k + 1."""
    bound = params.n - params.k + 1
    return BoundReport("singleton", True, Fraction(bound), params.d <= bound)


def intersecting_dk(params: CodeParams) -> BoundReport:
    """Necessary conditions for an intersecting code: d >= k and n >= 2k-1."""
    ok = params.d >= params.k and params.n >= 2 * params.k - 1
    return BoundReport("intersecting-distance", True, Fraction(params.k), ok)


def griesmer_type(k: int, q: int) -> int:
    """Minimum admissible length of an intersecting code of dimension k:
    the Griesmer sum evaluated at d = k."""
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    return sum(ceil(k / q**j) for j in range(k))


def minimal_code_bound(params: CodeParams) -> BoundReport:
    """d >= k + q - 2, necessary for a minimal code."""
    bound = params.k + params.q - 2
    return BoundReport("minimal-distance", True, Fraction(bound), params.d >= bound)


def ekr_wd(n: int, d: int, t: int, q: int) -> BoundReport:
    """W_d <= (q-1) C(n-t, d-t) for t-intersecting codes, applicable when
    n >= (t+1)(d-t+1).  Value-only: callers compare a measured W_d."""
    applicable = n >= (t + 1) * (d - t + 1)
    value = (q - 1) * comb(n - t, d - t) if d >= t else 0
    return BoundReport("ekr-weight", applicable, Fraction(value), None)


def minimal_weight_range_bound(n: int, i: int, t: int, q: int) -> BoundReport:
    """The same binomial bound at weight i, applicable while i stays below
    t - 1 + floor(n / (t+1))."""
    applicable = i <= t - 1 + n // (t + 1)
    value = (q - 1) * comb(n - t, i - t) if i >= t else 0
    return BoundReport("weight-range", applicable, Fraction(value), None)


def hilton_milner(n: int, r: int, q: int) -> BoundReport:
    """(q-1)(C(n-1,r-1) - C(n-r-1,r-1) + 1), applicable for n >= 2r; the
    caller asserts that no coordinate is nonzero in every weight-r word."""
    applicable = n >= 2 * r
    value = 0
    if applicable:
        value = (q - 1) * (comb(n - 1, r - 1) - comb(n - r - 1, r - 1) + 1)
    return BoundReport("hilton-milner", applicable, Fraction(value), None)


def i_lower_bound(k: int, q: int) -> Fraction:
    """Best of the Plotkin-style lower bounds on the shortest intersecting
    length: max over 1 <= t <= k of k + (q^t - 1)/(q^t - q^(t-1)) (k - t)."""
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    return max(
        Fraction(k) + Fraction(q**t - 1, q**t - q ** (t - 1)) * (k - t)
        for t in range(1, k + 1)
    )


def search_shortest_intersecting(
    k: int,
    q: int,
    n_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> tuple[Optional[int], Optional[LinearCode]]:
    """Exhaustive search for the shortest length admitting an intersecting
    [n, k]_q code, n <= n_max.

    Enumerates canonical RREF generators in lexicographic order; the witness
    is the first intersecting code at the smallest feasible length.  Work is
    split into contiguous slices of that order, so the reported witness does
    not depend on the thread count.
    """
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    field = field_from_order(q)
    for n in range(k, n_max + 1):
        check_budget(gaussian_binomial(n, k, q), budget, f"[{n},{k}]_{q} codes")
        codes = list(enumerate_codes(n, k, field, budget=budget))

        def first_hit(chunk: Sequence[LinearCode]) -> Optional[LinearCode]:
            for code in chunk:
                if is_t_intersecting(code, 1, budget=budget)[0]:
                    return code
            return None

        step = max(1, -(-len(codes) // max(1, 4 * threads)))
        chunks = [codes[i : i + step] for i in range(0, len(codes), step)]
        for hit in ordered_map(first_hit, chunks, threads=threads):
            if hit is not None:
                return n, hit
    return None, None


@dataclass(frozen=True)
class DensityPoint:
    q: int
    intersecting: int
    samples: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.intersecting, self.samples)


def density_experiment(
    n: int,
    k: int,
    q_list: Sequence[int],
    samples: int,
    seed: int,
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> list[DensityPoint]:
    """Monte Carlo fraction of intersecting [n, k]_q codes for each q.

    Each q gets its own RNG stream derived from (seed, q), so per-q results
    do not depend on evaluation order or thread count.
    """
    if samples < 1:
        raise ValueError(f"sample count must be >= 1, got {samples}")

    def one_q(q: int) -> DensityPoint:
        field = field_from_order(q)
        rng = random.Random(seed * 1_000_003 + q)
        hits = 0
        for _ in range(samples):
            code = random_code_stream(n, k, field, rng)
            if is_t_intersecting(code, 1, budget=budget)[0]:
                hits += 1
        return DensityPoint(q, hits, samples)

    return ordered_map(one_q, list(q_list), threads=threads)
