"""Replication suites over the shipped fixture corpus.

Two suites, "classical" and "q".  Each one re-derives every theorem-level
claim on every corpus instance and stops at the first counterexample, so a
passing run is a positive statement: N checks were evaluated and none
failed.  Results are plain data (suite name, check count, counterexample or
None) and the check order is fixed, which keeps reports byte-identical
regardless of the thread count.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .budget import DEFAULT_BUDGET
from .bounds import ekr_wd, griesmer_type
from .codes import (
    LinearCode,
    codewords_projective,
    enumerate_codes,
    intersecting_degree,
    is_minimal_code,
    is_minimal_codeword,
    is_t_intersecting,
    minimum_distance,
    random_code_stream,
    support,
    weight_distribution,
)
from .fields import field_make
from .fileio import code_to_dict, parse_code
from .matroid import (
    check_matroid_axioms,
    cocircuits,
    has_disjoint_cocircuits,
    matroid_from_code,
    matroid_from_rank_table,
    uniform_matroid,
    vertical_connectivity,
)
from .qmatroid import (
    QMatroid,
    adapted_basis_for_separation,
    check_qmatroid_axioms,
    has_disjoint_q_circuits,
    induced_classical_matroid,
    q_circuits,
    q_dual,
    q_vertical_connectivity,
    qmatroid_from_rank_code,
    qmatroid_from_rank_table,
    uniform_qmatroid,
)
from .linalg import matrix, vec_mat_mul
from .rankcodes import RankMetricCode, is_intersecting_rank, rank_minimal_supports
from .subspaces import subspace_from_rows, subspace_lattice
from .workers import ordered_map

_CORPUS = Path(__file__).resolve().parent / "corpus"

UNIFORM_N_MAX = 8
UNIFORM_Q_N_MAX = 4


def _load(name: str) -> dict:
    return json.loads((_CORPUS / name).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of one suite: how many checks ran and the first failure."""

    suite: str
    checks: int
    counterexample: Optional[dict]

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "verdict": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }


def _fail(check: str, code, **detail) -> dict:
    out = {"check": check, "code": code_to_dict(code)}
    out.update(detail)
    return out


def classical_corpus() -> list[LinearCode]:
    """Corpus order is fixed: named fixtures, then the exhaustive binary
    family (n <= 6, k <= 3), then the seeded random ternary draws."""
    doc = _load("hamming_codes.json")
    codes = [parse_code(d) for d in doc["codes"]]
    f2 = field_make(2, 1)
    for n in range(1, 7):
        for k in range(1, min(3, n) + 1):
            codes.extend(enumerate_codes(n, k, f2))
    spec = doc["random_ternary"]
    field = field_make(spec["q"], 1)
    rng = random.Random(spec["seed"])
    for _ in range(spec["count"]):
        n = rng.randint(1, spec["n_max"])
        k = rng.randint(1, min(spec["k_max"], n))
        codes.append(random_code_stream(n, k, field, rng))
    return codes


def _check_code(code: LinearCode, budget: int) -> tuple[int, Optional[dict]]:
    checks = 0
    m = matroid_from_code(code)
    intersecting, _ = is_t_intersecting(code, 1, budget=budget)
    kappa, sep = vertical_connectivity(m)

    checks += 1
    if (kappa == code.k) != intersecting:
        return checks, _fail(
            "kappa-equals-dimension-iff-intersecting", code,
            kappa=kappa, k=code.k, intersecting=intersecting,
        )

    checks += 1
    disjoint, pair = has_disjoint_cocircuits(m)
    if disjoint != (sep is not None):
        return checks, _fail(
            "disjoint-cocircuits-iff-vertical-separation", code,
            disjoint_cocircuits=disjoint,
            separation=None if sep is None else list(sep.subset),
        )

    checks += 1
    minimal_supports = set()
    for v in codewords_projective(code, budget=budget):
        if is_minimal_codeword(code, v, budget=budget):
            minimal_supports.add(tuple(sorted(support(v))))
    if minimal_supports != set(cocircuits(m)):
        return checks, _fail(
            "minimal-supports-equal-cocircuits", code,
            supports=sorted(minimal_supports),
            cocircuits=[list(c) for c in cocircuits(m)],
        )

    d = minimum_distance(code, budget=budget)
    q = code.field.order
    if intersecting:
        checks += 1
        if not (d >= code.k and code.n >= 2 * code.k - 1):
            return checks, _fail("intersecting-parameter-bounds", code, d=d)
        checks += 1
        if code.n < griesmer_type(code.k, q):
            return checks, _fail(
                "intersecting-length-bound", code,
                n=code.n, required=griesmer_type(code.k, q),
            )
        checks += 1
        t = intersecting_degree(code, budget=budget)
        report = ekr_wd(code.n, d, t, q)
        wd = weight_distribution(code, budget=budget)[d]
        if report.applicable and wd > report.value:
            return checks, _fail(
                "weight-count-bound", code, w_d=wd, limit=str(report.value),
            )

    # One-dimensional codes are minimal for free (all codewords are
    # proportional) and may sit below the field-size bound, so that bound
    # is only asserted from dimension two up.
    minimal, _ = is_minimal_code(code, budget=budget)
    if minimal and code.k >= 2:
        checks += 1
        if d < code.k + q - 2:
            return checks, _fail("minimal-distance-bound", code, d=d)

    checks += 1
    ok, message = check_matroid_axioms(m, budget=budget)
    if not ok:
        return checks, _fail("matroid-axioms", code, message=message)

    return checks, None


def _uniform_kappa_expected(k: int, n: int) -> int:
    return n - k + 1 if n <= 2 * k - 2 else k


def verify_classical(*, threads: int = 1, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    checks = 0
    counterexample: Optional[dict] = None

    for done, failure in ordered_map(
        lambda c: _check_code(c, budget), classical_corpus(), threads=threads
    ):
        checks += done
        if failure is not None:
            counterexample = failure
            break

    if counterexample is None:
        for n in range(1, UNIFORM_N_MAX + 1):
            for k in range(0, n + 1):
                u = uniform_matroid(k, n)
                kappa, sep = vertical_connectivity(u)
                checks += 1
                if kappa != _uniform_kappa_expected(k, n):
                    counterexample = {
                        "check": "uniform-kappa-formula",
                        "uniform": [k, n], "kappa": kappa,
                    }
                    break
                if n <= 7:
                    checks += 1
                    disjoint, _ = has_disjoint_cocircuits(u)
                    if disjoint != (sep is not None):
                        counterexample = {
                            "check": "disjoint-cocircuits-iff-vertical-separation",
                            "uniform": [k, n],
                        }
                        break
            if counterexample is not None:
                break

    if counterexample is None:
        checks += 1
        doc = _load("corrupt_matroid.json")
        bad = matroid_from_rank_table(doc["n"], [int(r) for r in doc["ranks"]])
        ok, message = check_matroid_axioms(bad)
        if ok or not message.startswith("R3"):
            counterexample = {
                "check": "corrupted-control-must-fail",
                "message": message,
            }

    return SuiteReport("classical", checks, counterexample)


def rank_corpus() -> list[RankMetricCode]:
    return [parse_code(d) for d in _load("rank_codes.json")["codes"]]


def _shear_rows(n: int) -> list[list[int]]:
    """Rows of an invertible shear matrix: identity plus a superdiagonal."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        if i + 1 < n:
            rows[i][i + 1] = 1
    return rows


def _check_rank_code(code: RankMetricCode, budget: int) -> tuple[int, Optional[dict]]:
    checks = 0
    m = qmatroid_from_rank_code(code)

    checks += 1
    ok, message = check_qmatroid_axioms(m, budget=budget)
    if not ok:
        return checks, _fail("q-matroid-axioms", code, message=message)

    kappa, sep = q_vertical_connectivity(m, budget=budget)
    intersecting, _ = is_intersecting_rank(code, budget=budget)

    checks += 1
    if (kappa == code.k) != intersecting:
        return checks, _fail(
            "q-kappa-equals-dimension-iff-intersecting", code,
            kappa=kappa, k=code.k, intersecting=intersecting,
        )

    dual = q_dual(m)
    checks += 1
    disjoint, _ = has_disjoint_q_circuits(dual, budget=budget)
    if disjoint != (sep is not None):
        return checks, _fail(
            "disjoint-dual-circuits-iff-vertical-separation", code,
            disjoint_circuits=disjoint, separation_found=sep is not None,
        )

    checks += 1
    dual_circuit_keys = {c.key() for c in q_circuits(dual, budget=budget)}
    support_keys = {s.key() for s in rank_minimal_supports(code, budget=budget)}
    if dual_circuit_keys != support_keys:
        return checks, _fail("dual-circuits-equal-minimal-supports", code)

    checks += 1
    double = q_dual(dual)
    lattice = subspace_lattice(m.field, m.ambient, budget=budget)
    if any(double.rho(s) != m.rho(s) for s in lattice.subspaces):
        return checks, _fail("double-dual-identity", code)

    checks += 1
    sheared = QMatroid(
        m.field, m.ambient,
        _transformed_rho(m, _shear_rows(m.ambient)),
        provenance="sheared",
    )
    sheared_kappa, _ = q_vertical_connectivity(sheared, budget=budget)
    if sheared_kappa != kappa:
        return checks, _fail(
            "kappa-invariant-under-basis-change", code,
            kappa=kappa, sheared=sheared_kappa,
        )

    if sep is not None:
        checks += 1
        beta = adapted_basis_for_separation(m, budget=budget)
        induced = induced_classical_matroid(m, beta)
        induced_kappa, _ = vertical_connectivity(induced)
        if induced_kappa != kappa:
            return checks, _fail(
                "induced-matroid-kappa", code,
                kappa=kappa, induced=induced_kappa,
            )
        checks += 1
        ok, message = check_matroid_axioms(induced)
        if not ok:
            return checks, _fail("induced-matroid-axioms", code, message=message)

    return checks, None


def _transformed_rho(m: QMatroid, rows: list[list[int]]):
    t = matrix(m.field, rows, ncols=m.ambient)

    def rho(space):
        image = subspace_from_rows(
            m.field, m.ambient,
            [vec_mat_mul(m.field, v, t) for v in space.basis.rows()],
        )
        return m.rho(image)

    return rho


def verify_q(*, threads: int = 1, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    checks = 0
    counterexample: Optional[dict] = None

    for done, failure in ordered_map(
        lambda c: _check_rank_code(c, budget), rank_corpus(), threads=threads
    ):
        checks += done
        if failure is not None:
            counterexample = failure
            break

    if counterexample is None:
        f2 = field_make(2, 1)
        for n in range(1, UNIFORM_Q_N_MAX + 1):
            for k in range(0, n + 1):
                u = uniform_qmatroid(k, n, f2)
                checks += 1
                ok, message = check_qmatroid_axioms(u, budget=budget)
                if not ok:
                    counterexample = {
                        "check": "uniform-q-matroid-axioms",
                        "uniform": [k, n], "message": message,
                    }
                    break
                checks += 1
                kappa, _ = q_vertical_connectivity(u, budget=budget)
                if kappa != _uniform_kappa_expected(k, n):
                    counterexample = {
                        "check": "uniform-q-kappa-formula",
                        "uniform": [k, n], "kappa": kappa,
                    }
                    break
                checks += 1
                dual = q_dual(u)
                mirror = uniform_qmatroid(n - k, n, f2)
                lattice = subspace_lattice(f2, n, budget=budget)
                if any(dual.rho(s) != mirror.rho(s) for s in lattice.subspaces):
                    counterexample = {
                        "check": "uniform-dual-identity", "uniform": [k, n],
                    }
                    break
            if counterexample is not None:
                break

    if counterexample is None:
        checks += 1
        doc = _load("corrupt_qmatroid.json")
        bad = qmatroid_from_rank_table(
            field_make(doc["p"], doc["m"]), doc["n"],
            {str(k): int(v) for k, v in doc["ranks"].items()},
        )
        ok, message = check_qmatroid_axioms(bad)
        if ok or not message.startswith("qR3"):
            counterexample = {
                "check": "corrupted-control-must-fail",
                "message": message,
            }

    return SuiteReport("q", checks, counterexample)


def run_suites(which: str, *, threads: int = 1,
               budget: int = DEFAULT_BUDGET) -> list[SuiteReport]:
    if which not in ("classical", "q", "all"):
        raise ValueError(f"unknown suite {which!r}; expected classical, q, or all")
    reports = []
    if which in ("classical", "all"):
        reports.append(verify_classical(threads=threads, budget=budget))
    if which in ("q", "all"):
        reports.append(verify_q(threads=threads, budget=budget))
    return reports
