"""Canonical JSON interchange for every domain type (schema version 1).

Rationals travel as strings "p/q" ("p" when q=1) so exactness survives the
round trip; element terms are listed in sorted column-key order so encodings
are byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .combinatorics import Partition, SkewShape, Tableau
from .linalg import RationalMatrix, rational_from_str, rational_to_str
from .points import FlagPoint
from .ranks import Sigma2Verdict
from .spaces import AmbientElement, SkewAmbientElement

SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    """Input does not match the interchange schema."""


def partition_to_json(p: Partition) -> list[int]:
    return list(p.parts)


def partition_from_json(data) -> Partition:
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise SchemaError(f"partition must be a list of integers, got {data!r}")
    try:
        return Partition(tuple(data))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def tableau_to_json(t: Tableau) -> dict:
    out = {"shape": partition_to_json(t.shape.outer), "rows": [list(r) for r in t.rows]}
    if not t.shape.is_straight:
        out["inner"] = partition_to_json(t.shape.inner)
    return out


def tableau_from_json(data) -> Tableau:
    if not isinstance(data, dict) or "shape" not in data or "rows" not in data:
        raise SchemaError("tableau needs 'shape' and 'rows'")
    outer = partition_from_json(data["shape"])
    inner = partition_from_json(data.get("inner", []))
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("tableau rows must be a list of lists")
    try:
        return Tableau(SkewShape(outer, inner), tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _terms_to_json(element) -> list[dict]:
    return [
        {"coeff": rational_to_str(v), "columns": [list(col) for col in key]}
        for key, v in element.sorted_terms()
    ]


def _terms_from_json(data) -> dict:
    if not isinstance(data, list):
        raise SchemaError("terms must be a list")
    terms = {}
    for item in data:
        if not isinstance(item, dict) or "coeff" not in item or "columns" not in item:
            raise SchemaError("each term needs 'coeff' and 'columns'")
        try:
            coeff = rational_from_str(str(item["coeff"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {item['coeff']!r}") from exc
        cols = item["columns"]
        if not isinstance(cols, list) or not all(isinstance(c, list) for c in cols):
            raise SchemaError("columns must be a list of integer lists")
        key = tuple(tuple(int(i) for i in c) for c in cols)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return terms


def element_to_json(element: AmbientElement) -> dict:
    return {
        "lambda": partition_to_json(element.lam),
        "n": element.n,
        "dual": element.dual,
        "terms": _terms_to_json(element),
    }


def element_from_json(data) -> AmbientElement:
    if not isinstance(data, dict):
        raise SchemaError("element must be an object")
    for field in ("lambda", "n", "terms"):
        if field not in data:
            raise SchemaError(f"element needs '{field}'")
    lam = partition_from_json(data["lambda"])
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("n must be a positive integer")
    try:
        return AmbientElement(lam, n, _terms_from_json(data["terms"]), bool(data.get("dual", False)))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def skew_element_to_json(element: SkewAmbientElement) -> dict:
    return {
        "outer": partition_to_json(element.shape.outer),
        "inner": partition_to_json(element.shape.inner),
        "n": element.n,
        "dual": element.dual,
        "terms": _terms_to_json(element),
    }


def any_element_to_json(element) -> dict:
    if isinstance(element, SkewAmbientElement):
        return skew_element_to_json(element)
    return element_to_json(element)


def flag_point_to_json(point: FlagPoint) -> dict:
    return {
        "n": point.n,
        "lambda": partition_to_json(point.lam),
        "subspaces": [
            [[rational_to_str(x) for x in row] for row in space] for space in point.subspaces
        ],
    }


def flag_point_from_json(data) -> FlagPoint:
    if not isinstance(data, dict):
        raise SchemaError("flag point must be an object")
    for field in ("n", "lambda", "subspaces"):
        if field not in data:
            raise SchemaError(f"flag point needs '{field}'")
    lam = partition_from_json(data["lambda"])
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("n must be a positive integer")
    spaces = data["subspaces"]
    if not isinstance(spaces, list):
        raise SchemaError("subspaces must be a list")
    parsed = []
    for space in spaces:
        if not isinstance(space, list) or not all(isinstance(r, list) for r in space):
            raise SchemaError("each subspace must be a list of generator rows")
        rows = []
        for row in space:
            if len(row) != n:
                raise SchemaError(f"generator rows must have length n={n}")
            try:
                rows.append(tuple(rational_from_str(str(x)) for x in row))
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"bad rational in subspace row {row!r}") from exc
        parsed.append(tuple(rows))
    try:
        return FlagPoint(n, lam, tuple(parsed))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _label_to_json(label):
    if isinstance(label, Tableau):
        return tableau_to_json(label)
    if isinstance(label, tuple):
        return [list(c) if isinstance(c, tuple) else c for c in label]
    return label


def matrix_to_json(m: RationalMatrix) -> dict:
    return {
        "row_labels": [_label_to_json(l) for l in m.row_labels],
        "col_labels": [_label_to_json(l) for l in m.col_labels],
        "entries": [
            [i, j, rational_to_str(v)] for (i, j), v in sorted(m.entries.items())
        ],
        "shape": list(m.shape),
    }


def verdict_to_json(v: Sigma2Verdict) -> dict:
    return {
        "border_rank_class": v.border_rank_class,
        "rank": v.rank,
        "orbit_data": None
        if v.orbit_data is None
        else {"h": v.orbit_data.h, "lines_equal": v.orbit_data.lines_equal},
        "rank_triple": list(v.rank_triple),
        "caveat": v.caveat,
    }


def canonical_dumps(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
