"""JSON formats for codes, rank tables, and reports.

Code files look like {"p": 3, "m": 1, "n": 6, "generator": [[...], ...]};
entries are integer field-element encodings.  A rank-metric code adds
"m_ext" (the extension degree over GF(p^m)) and its generator entries are
encodings in the extension field.  All emitted JSON is canonical: sorted
keys, no whitespace.
"""
from __future__ import annotations

import json
from typing import Any, Union

from .codes import LinearCode
from .fields import field_make
from .linalg import matrix
from .matroid import Matroid, matroid_from_rank_table
from .qmatroid import QMatroid, qmatroid_from_rank_table
from .rankcodes import ExtensionSpec, RankMetricCode


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_code(doc: dict) -> Union[LinearCode, RankMetricCode]:
    """Build a code from a parsed JSON document; picks the rank-metric
    variant when "m_ext" is present."""
    try:
        p, m, n = int(doc["p"]), int(doc["m"]), int(doc["n"])
        rows = [[int(a) for a in row] for row in doc["generator"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed code document: {exc}") from exc
    if not rows:
        raise ValueError("generator has no rows; zero-dimensional input is not accepted")
    if "m_ext" in doc:
        ext = ExtensionSpec(field_make(p, m), int(doc["m_ext"]))
        g = matrix(ext.ext, rows, ncols=n)
        return RankMetricCode(ext, n, g.nrows, g)
    field = field_make(p, m)
    g = matrix(field, rows, ncols=n)
    return LinearCode(field, n, g.nrows, g)


def load_code(path: str) -> Union[LinearCode, RankMetricCode]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return parse_code(doc)


def code_to_dict(code: Union[LinearCode, RankMetricCode]) -> dict:
    if isinstance(code, RankMetricCode):
        base = code.extension.base
        return {
            "p": base.p,
            "m": base.m,
            "m_ext": code.extension.degree,
            "n": code.n,
            "generator": [list(r) for r in code.generator.rows()],
        }
    return {
        "p": code.field.p,
        "m": code.field.m,
        "n": code.n,
        "generator": [list(r) for r in code.generator.rows()],
    }


def parse_matroid_table(doc: dict) -> Matroid:
    try:
        n = int(doc["n"])
        ranks = [int(r) for r in doc["ranks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matroid table: {exc}") from exc
    return matroid_from_rank_table(n, ranks)


def parse_qmatroid_table(doc: dict) -> QMatroid:
    try:
        p, m, n = int(doc["p"]), int(doc["m"]), int(doc["n"])
        ranks = {str(k): int(v) for k, v in doc["ranks"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ValueError(f"malformed q-matroid table: {exc}") from exc
    return qmatroid_from_rank_table(field_make(p, m), n, ranks)
