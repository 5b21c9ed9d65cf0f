"""Reading and writing structures: JSON envelope, text tables, DOT graphs.

Every file holds one structure in a self-describing JSON envelope whose
"kind" field is one of matgraph, vine, domain, lattice, matrix.  All emitted
documents are canonically sorted so identical structures serialize to
identical bytes.
"""

from __future__ import annotations

import json
from typing import Union

from . import domain as dm
from . import lattice as lt
from . import matgraph as mg
from . import vine as vn
from .errors import StructureError

Structure = Union[mg.MatLabeledGraph, vn.RegularVine, dm.PreferenceDomain,
                  lt.BoundedLattice, lt.BinaryMatrix]

KINDS = ("matgraph", "vine", "domain", "lattice", "matrix")


def kind_of(obj: Structure) -> str:
    if isinstance(obj, mg.MatLabeledGraph):
        return "matgraph"
    if isinstance(obj, vn.RegularVine):
        return "vine"
    if isinstance(obj, dm.PreferenceDomain):
        return "domain"
    if isinstance(obj, lt.BoundedLattice):
        return "lattice"
    if isinstance(obj, lt.BinaryMatrix):
        return "matrix"
    raise TypeError(f"unknown structure type {type(obj).__name__}")


def to_json_dict(obj: Structure) -> dict:
    kind = kind_of(obj)
    if kind == "matgraph":
        return {"kind": kind,
                "vertices": sorted(obj.vertices),
                "edges": [{"u": u, "v": v, "label": obj.labels[(u, v)]} for (u, v) in obj.edges()]}
    if kind == "vine":
        return {"kind": kind,
                "ground": sorted(obj.ground),
                "nodes": [sorted(s) for s in obj.sorted_nodes()]}
    if kind == "domain":
        return {"kind": kind,
                "alternatives": sorted(obj.alternatives),
                "preferences": [list(w) for w in obj.sorted_prefs()]}
    if kind == "lattice":
        return {"kind": kind,
                "ground": sorted(obj.ground),
                "nodes": [sorted(s) for s in obj.sorted_elements()]}
    return {"kind": kind,
            "rows": list(obj.rows),
            "columns": ["".join(str(b) for b in col) for col in sorted(obj.columns)]}


def dumps(obj: Structure) -> str:
    return json.dumps(to_json_dict(obj), sort_keys=True, separators=(",", ":")) + "\n"


def from_json_dict(doc: dict) -> Structure:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise StructureError("parse.kind", "document has no \"kind\" field")
    kind = doc["kind"]
    try:
        if kind == "matgraph":
            return mg.mat_graph(doc["vertices"],
                                [(e["u"], e["v"], e["label"]) for e in doc["edges"]])
        if kind == "vine":
            return vn.vine(doc["ground"], doc["nodes"])
        if kind == "domain":
            return dm.domain(doc["alternatives"], doc["preferences"])
        if kind == "lattice":
            return lt.lattice(doc["nodes"])
        if kind == "matrix":
            rows = tuple(doc["rows"])
            cols = frozenset(tuple(int(c) for c in col) for col in doc["columns"])
            for col in cols:
                if len(col) != len(rows) or any(b not in (0, 1) for b in col):
                    raise StructureError("parse.matrix", f"bad column {col}")
            if len(cols) != len(doc["columns"]):
                raise StructureError("parse.matrix", "duplicate columns")
            return lt.BinaryMatrix(rows, cols)
    except (KeyError, TypeError) as exc:
        raise StructureError("parse.payload", f"malformed {kind} payload: {exc}") from exc
    raise StructureError("parse.kind", f"unknown kind {kind!r}")


def loads(text: str) -> Structure:
    return from_json_dict(json.loads(text))


def load_file(path: str) -> Structure:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def to_text(obj: Structure) -> str:
    kind = kind_of(obj)
    if kind == "domain":
        return dm.render_table(obj)
    if kind == "matrix":
        return matrix_text(obj)
    if kind == "matgraph":
        lines = [f"{u} {v} {obj.labels[(u, v)]}" for (u, v) in obj.edges()]
        return "\n".join(lines) + "\n" if lines else "(no edges)\n"
    # vine / lattice: one node per line, rank-stratified
    nodes = obj.sorted_nodes() if kind == "vine" else obj.sorted_elements()
    lines = ["{" + ",".join(sorted(s)) + "}" for s in nodes]
    return "\n".join(lines) + "\n" if lines else "(empty)\n"


def matrix_text(m: lt.BinaryMatrix) -> str:
    """Row-per-line rendering of the column-sorted matrix."""
    cols = sorted(m.columns)
    if not cols or not m.rows:
        return "(empty)\n"
    lines = ["".join(str(col[r]) for col in cols) for r in range(len(m.rows))]
    return "\n".join(lines) + "\n"


def to_dot(obj: Structure) -> str:
    kind = kind_of(obj)
    if kind == "matgraph":
        lines = ["graph matgraph {"]
        for v in sorted(obj.vertices):
            lines.append(f'  "{v}";')
        for (u, v) in obj.edges():
            lines.append(f'  "{u}" -- "{v}" [label={obj.labels[(u, v)]}];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if kind in ("vine", "lattice"):
        nodes = obj.sorted_nodes() if kind == "vine" else obj.sorted_elements()
        name = {s: "{" + ",".join(sorted(s)) + "}" for s in nodes}
        lines = [f"digraph {kind} {{", "  rankdir=BT;"]
        for s in nodes:
            lines.append(f'  "{name[s]}";')
        for s in nodes:
            below = [t for t in nodes if t < s]
            for t in below:
                if not any(t < u < s for u in below):
                    lines.append(f'  "{name[t]}" -> "{name[s]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise StructureError("format.dot", f"no DOT form for kind {kind!r}")
