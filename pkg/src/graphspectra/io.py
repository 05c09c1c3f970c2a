"""File formats and deterministic report emission.

Graphs travel as JSON objects with "vertices" and "edges" (id/src/dst),
matrices as row-major 0/1 arrays with an optional index labeling (or as
CSV rows of integers), SFTs as a matrix plus an optional involution pair
list, and presentations as alphabet / lambda / words.  Reports are
emitted with stable field ordering and every float rounded to 12
significant digits, so identical inputs produce identical bytes.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
from pathlib import Path

from .buildings import PolygonalPresentation, make_presentation
from .errors import UsageError
from .graphs import EdgeMatrix, FiniteGraph
from .ktheory import AbelianGroup
from .shift import SFTData


def load_graph(source) -> FiniteGraph:
    data = _load_json(source)
    edges = tuple((e["id"], e["src"], e["dst"]) for e in data["edges"])
    return FiniteGraph(tuple(data["vertices"]), edges)


def graph_to_dict(g: FiniteGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": eid, "src": src, "dst": dst} for eid, src, dst in g.edges],
    }


def matrix_to_dict(em: EdgeMatrix) -> dict:
    return {"matrix": [list(row) for row in em.matrix], "labels": list(em.labels)}


def load_matrix_rows(source) -> tuple:
    """Raw (rows, labels) from matrix JSON ({"matrix": rows, "labels":
    optional}) or CSV rows of integers; no shape validation."""
    path = Path(source) if not isinstance(source, dict) else None
    if path is not None and path.suffix.lower() == ".csv":
        with open(path, newline="") as handle:
            rows = tuple(tuple(int(x) for x in row)
                         for row in csv.reader(handle) if row)
        return rows, tuple(str(i) for i in range(len(rows)))
    data = _load_json(source)
    rows = tuple(tuple(int(x) for x in row) for row in data["matrix"])
    labels = tuple(data.get("labels") or [str(i) for i in range(len(rows))])
    return rows, labels


def load_matrix(source) -> EdgeMatrix:
    """Matrix file as a validated square 0/1 EdgeMatrix."""
    rows, labels = load_matrix_rows(source)
    return EdgeMatrix(rows, labels)


def load_sft(source) -> SFTData:
    data = _load_json(source)
    rows = tuple(tuple(int(x) for x in row) for row in data["matrix"])
    labels = tuple(data.get("labels") or [str(i) for i in range(len(rows))])
    involution = None
    if data.get("involution"):
        involution = [None] * len(rows)
        for i, j in data["involution"]:
            involution[i] = j
            involution[j] = i
        involution = tuple(involution)
    return SFTData(rows, labels, involution)


def presentation_to_dict(p: PolygonalPresentation) -> dict:
    return {
        "alphabet": list(p.alphabet),
        "lambda": [list(pair) for pair in p.lam],
        "words": [list(w) for w in p.orbits()],
    }


def load_presentation(source) -> PolygonalPresentation:
    data = _load_json(source)
    return make_presentation(
        tuple(data["alphabet"]),
        tuple((a, b) for a, b in data["lambda"]),
        [tuple(w) for w in data["words"]],
    )


def k_theory_to_dict(k0: AbelianGroup, k1: AbelianGroup) -> dict:
    return {
        "k0": {"rank": k0.rank, "torsion": list(k0.torsion)},
        "k1": {"rank": k1.rank},
    }


def _load_json(source):
    if isinstance(source, dict):
        return source
    with open(source) as handle:
        return json.load(handle)


def round_floats(obj, significant: int = 12):
    """Round every float in a nested structure to ``significant`` digits."""
    if isinstance(obj, float):
        return float(f"{obj:.{significant}g}")
    if isinstance(obj, dict):
        return {k: round_floats(v, significant) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, significant) for v in obj]
    return obj


def emit(report: dict, fmt: str, rows: list[dict] | None = None) -> bytes:
    """Render a report deterministically.

    json: the report object with insertion-ordered keys.
    csv: the tabular view (``rows``), header from the first row.
    table: aligned key/value or tabular text.
    """
    report = round_floats(report)
    if fmt == "json":
        return (json.dumps(report, indent=2) + "\n").encode()
    if fmt == "csv":
        if rows is None:
            rows = _flatten_to_rows(report)
        rows = [round_floats(r) for r in rows]
        buf = _stdio.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [])
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().encode()
    if fmt == "table":
        if rows is None:
            rows = _flatten_to_rows(report)
        rows = [round_floats(r) for r in rows]
        if not rows:
            return b""
        cols = list(rows[0].keys())
        cells = [[str(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells))
                  for i, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths))
                     for row in cells)
        return ("\n".join(lines) + "\n").encode()
    raise UsageError(f"unsupported format: {fmt}", witness=fmt)


def _flatten_to_rows(report: dict) -> list[dict]:
    """Default CSV flattening: one row of dotted-path scalars."""
    flat: dict = {}

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(obj, (list, tuple)):
            flat[prefix] = json.dumps(obj)
        else:
            flat[prefix] = obj

    walk("", report)
    return [flat]
