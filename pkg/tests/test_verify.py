"""The replication suites themselves: corpus composition, determinism across
thread counts, and the frozen check totals.

The totals are regressions: any change to the corpus or to what a suite
checks per instance shows up here first.
"""

import pytest

from intercode.fileio import canonical_json
from intercode.verify import (
    classical_corpus,
    rank_corpus,
    run_suites,
    verify_classical,
    verify_q,
)

EXHAUSTIVE_BINARY = 2535  # all [n <= 6, k <= 3] RREF generators over GF(2)


@pytest.fixture(scope="module")
def classical_report():
    return verify_classical(threads=1)


@pytest.fixture(scope="module")
def q_report():
    return verify_q(threads=1)


def test_corpus_composition():
    codes = classical_corpus()
    assert len(codes) == 5 + EXHAUSTIVE_BINARY + 200
    assert len(rank_corpus()) == 66


def test_classical_suite_passes(classical_report):
    assert classical_report.passed
    assert classical_report.counterexample is None
    assert classical_report.checks == 13657


def test_q_suite_passes(q_report):
    assert q_report.passed
    assert q_report.checks == 509


def test_report_serialization(classical_report):
    doc = classical_report.to_dict()
    assert doc["verdict"] == "pass"
    assert doc["suite"] == "classical"
    canonical_json(doc)  # must be JSON-serializable as-is


def test_suites_are_thread_invariant(q_report):
    threaded = verify_q(threads=8)
    assert canonical_json(threaded.to_dict()) == canonical_json(q_report.to_dict())


def test_run_suites_dispatch(classical_report, q_report):
    both = run_suites("all")
    assert [r.suite for r in both] == ["classical", "q"]
    assert [r.checks for r in both] == [classical_report.checks, q_report.checks]
    only_q = run_suites("q")
    assert [r.suite for r in only_q] == ["q"]


def test_run_suites_rejects_unknown_name():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites("everything")
