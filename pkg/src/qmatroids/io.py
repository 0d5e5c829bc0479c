"""
Loading q-matroid, classical matroid and code descriptions.

Descriptions come either from JSON text or from a one-line family string
such as ``uniform:q=2,k=1,n=3``.  Field elements are integer codes in the
fixed element order (0, 1, then the rest).

q-matroid JSON::

    {"q": 2, "n": 3, "kind": "uniform", "k": 1}
    {"q": 2, "m": 2, "n": 3, "kind": "representable", "matrix": [[0, 0, 1]]}
    {"q": 2, "n": 2, "kind": "table",
     "table": [{"space": [[1, 0]], "rank": 1}, ...]}      # every subspace once

``"table"`` may also be a flat list of ranks in canonical subspace order
(by dimension, then reduced generator).  The zero space is written ``[]``.

Classical JSON has ``"q": 1``::

    {"q": 1, "n": 4, "kind": "uniform", "k": 2}
    {"q": 1, "kind": "representable", "field": 3, "matrix": [[1, 0, 1], [0, 1, 2]]}
    {"q": 1, "kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}
    {"q": 1, "n": 2, "kind": "table", "table": [0, 1, 1, 1]}   # indexed by bitmask

Code JSON::

    {"q": 2, "m": 2, "n": 2, "k": 1, "basis": "default", "matrix": [[1, 2]]}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from . import classical
from .battery import P1_MATRIX, P1_STAR_MATRIX
from .codes import RankMetricCode
from .gf import field_of_order, gaussian_binomial, make_field
from .grassmann import DEFAULT_SUBSPACE_BUDGET, subspace_lattice
from .errors import BudgetExceeded
from .linalg import rref_of
from .qmatroid import QMatroid, from_representation, from_table, uniform


class DescriptionError(ValueError):
    """Malformed description; ``line`` and ``column`` locate JSON syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def parse_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptionError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise DescriptionError("description must be a JSON object")
    return data


def _need(d: dict, key: str) -> Any:
    if key not in d:
        raise DescriptionError(f"missing field {key!r}")
    return d[key]


def check_subspace_budget(q: int, n: int, budget: int) -> None:
    total = sum(gaussian_binomial(n, k, q) for k in range(n + 1))
    if total > budget:
        raise BudgetExceeded(f"subspaces of F_{q}^{n}", total, budget)


def qmatroid_from_dict(d: dict, budget: int = DEFAULT_SUBSPACE_BUDGET) -> QMatroid:
    q = int(_need(d, "q"))
    kind = _need(d, "kind")
    if q == 1:
        raise DescriptionError("q = 1 describes a classical matroid")
    field = field_of_order(q)
    if kind == "representable":
        G = _need(d, "matrix")
        n = int(d.get("n", len(G[0]) if G else 0))
        check_subspace_budget(q, n, budget)
        M = from_representation(G, field, int(_need(d, "m")))
        if M.n != n:
            raise DescriptionError(f"matrix has {M.n} columns but n = {n}")
        return M
    n = int(_need(d, "n"))
    check_subspace_budget(q, n, budget)
    if kind == "uniform":
        return uniform(int(_need(d, "k")), n, field)
    if kind == "table":
        table = _need(d, "table")
        L = subspace_lattice(field, n)
        if table and all(isinstance(x, int) for x in table):
            if len(table) != len(L):
                raise DescriptionError(f"flat table has {len(table)} entries, expected {len(L)}")
            mapping = dict(zip(L.spaces, table))
        else:
            mapping = {}
            for entry in table:
                U = rref_of(field, _need(entry, "space"), n)
                if U in mapping:
                    raise DescriptionError(f"subspace {U} listed twice")
                mapping[U] = int(_need(entry, "rank"))
        return from_table(field, n, mapping)
    raise DescriptionError(f"unknown q-matroid kind {kind!r}")


def classical_from_dict(d: dict) -> classical.ClassicalMatroid:
    kind = _need(d, "kind")
    if kind == "uniform":
        return classical.uniform(int(_need(d, "k")), int(_need(d, "n")))
    if kind == "representable":
        return classical.from_matrix(_need(d, "matrix"), field_of_order(int(_need(d, "field"))))
    if kind == "graphic":
        return classical.graphic(int(_need(d, "vertices")), [tuple(e) for e in _need(d, "edges")])
    if kind == "table":
        return classical.ClassicalMatroid(int(_need(d, "n")), [int(x) for x in _need(d, "table")])
    raise DescriptionError(f"unknown classical kind {kind!r}")


def code_from_dict(d: dict) -> RankMetricCode:
    q = int(_need(d, "q"))
    if d.get("basis", "default") != "default":
        raise DescriptionError("only the default polynomial basis is supported")
    G = _need(d, "matrix")
    n = int(d.get("n", len(G[0]) if G else 0))
    code = RankMetricCode(make_field(q), int(_need(d, "m")), n, G)
    if "k" in d and int(d["k"]) != code.k:
        raise DescriptionError(f"k = {d['k']} but the matrix has {code.k} rows")
    return code


# family strings


def _parse_matrix(text: str) -> list[list[int]]:
    return [[int(a) for a in row.split(",") if a != ""] for row in text.split(";") if row != ""]


def parse_family(spec: str) -> tuple[str, dict]:
    """``name:key=value,...``; a value may contain commas (matrix rows use ';')."""
    name, _, rest = spec.partition(":")
    params: dict[str, str] = {}
    if rest:
        for part in re.split(r",(?=[A-Za-z_]+=)", rest):
            key, eq, value = part.partition("=")
            if not eq:
                raise DescriptionError(f"bad family parameter {part!r} in {spec!r}")
            params[key.strip()] = value.strip()
    return name.strip().lower(), params


@dataclass
class Loaded:
    kind: str            # "q", "classical" or "code"
    obj: Any
    label: str


def family_description(spec: str) -> dict:
    """Translate a family string into the equivalent JSON description."""
    name, p = parse_family(spec)
    try:
        return _family(name, p)
    except KeyError as exc:
        raise DescriptionError(f"family {name!r} needs parameter {exc.args[0]!r}") from None
    except ValueError as exc:
        if isinstance(exc, DescriptionError):
            raise
        raise DescriptionError(f"bad value in family {spec!r}: {exc}") from None


def _family(name: str, p: dict) -> dict:
    if name in ("p1", "example47"):
        return {"q": 2, "m": 2, "n": 3, "kind": "representable", "matrix": [list(r) for r in P1_MATRIX]}
    if name in ("p1*", "p1star"):
        return {"q": 2, "m": 2, "n": 3, "kind": "representable", "matrix": [list(r) for r in P1_STAR_MATRIX]}
    if name == "uniform":
        return {"q": int(p["q"]), "n": int(p["n"]), "k": int(p["k"]), "kind": "uniform"}
    if name == "representable":
        return {"q": int(p["q"]), "m": int(p["m"]), "kind": "representable", "matrix": _parse_matrix(p["matrix"])}
    if name == "classical-uniform":
        return {"q": 1, "kind": "uniform", "k": int(p["k"]), "n": int(p["n"])}
    if name == "classical-matrix":
        return {"q": 1, "kind": "representable", "field": int(p["field"]), "matrix": _parse_matrix(p["matrix"])}
    if name == "classical-graphic":
        edges = [[int(a) for a in e.split("-")] for e in p["edges"].split(";") if e]
        return {"q": 1, "kind": "graphic", "vertices": int(p["vertices"]), "edges": edges}
    if name == "code":
        G = _parse_matrix(p["matrix"])
        return {"q": int(p["q"]), "m": int(p["m"]), "matrix": G, "basis": "default", "code": True}
    raise DescriptionError(f"unknown family {name!r}")


def load(text: str | None = None, family: str | None = None, budget: int = DEFAULT_SUBSPACE_BUDGET) -> Loaded:
    """Load exactly one of a JSON text or a family string."""
    if (text is None) == (family is None):
        raise DescriptionError("give exactly one of an input file or a family")
    d = parse_json(text) if text is not None else family_description(family)
    label = family or d.get("name", "input")
    if d.get("code") or "basis" in d:
        return Loaded("code", code_from_dict(d), label)
    if int(_need(d, "q")) == 1:
        return Loaded("classical", classical_from_dict(d), label)
    return Loaded("q", qmatroid_from_dict(d, budget), label)
