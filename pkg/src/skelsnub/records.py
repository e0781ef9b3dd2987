"""Snub records: lossless JSON serialization and OBJ export.

The JSON schema is a fixed contract: a top-level object with keys name,
vertex, typeSet, vertices, edges, faces, and analysis, where analysis holds
fvector, euler, symbol, orientable, and residuals.  Floats are emitted via
repr and parse back bit-identically, so serialize/parse round trips are
exact and repeated runs produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .analysis import FVector
from .group import TypeSet
from .snub import Edge, Face, SkeletalPolyhedron, SnubSource


@dataclass
class SnubRecord:
    name: str | None
    vertex: tuple
    type_set: tuple
    fvector: FVector
    euler: int
    symbol: str | None
    orientable: bool | None
    residuals: tuple
    polyhedron: SkeletalPolyhedron


def record_to_dict(rec: SnubRecord) -> dict:
    poly = rec.polyhedron
    return {
        "name": rec.name,
        "vertex": list(rec.vertex),
        "typeSet": list(rec.type_set),
        "vertices": [[float(c) for c in row] for row in poly.vertices],
        "edges": [{"a": e.a, "b": e.b, "type": e.type} for e in poly.edges],
        "faces": [
            {"cycle": list(f.cycle), "type": f.type} for f in poly.faces
        ],
        "analysis": {
            "fvector": {
                "f0": rec.fvector.f0,
                "f1": list(rec.fvector.f1),
                "f2": list(rec.fvector.f2),
            },
            "euler": rec.euler,
            "symbol": rec.symbol,
            "orientable": rec.orientable,
            "residuals": list(rec.residuals),
        },
    }


def record_from_dict(data: dict) -> SnubRecord:
    poly = SkeletalPolyhedron(
        vertices=np.array(data["vertices"], dtype=float),
        edges=[Edge(e["a"], e["b"], e["type"]) for e in data["edges"]],
        faces=[Face(tuple(f["cycle"]), f["type"]) for f in data["faces"]],
        vertex_group_element=None,
        source=SnubSource(
            data["name"],
            tuple(data["vertex"]),
            TypeSet(frozenset(data["typeSet"])),
        ),
    )
    ana = data["analysis"]
    fv = FVector(
        ana["fvector"]["f0"],
        tuple(ana["fvector"]["f1"]),
        tuple(ana["fvector"]["f2"]),
    )
    return SnubRecord(
        name=data["name"],
        vertex=tuple(data["vertex"]),
        type_set=tuple(data["typeSet"]),
        fvector=fv,
        euler=ana["euler"],
        symbol=ana["symbol"],
        orientable=ana["orientable"],
        residuals=tuple(ana["residuals"]),
        polyhedron=poly,
    )


def dumps_record(rec: SnubRecord) -> str:
    return json.dumps(record_to_dict(rec), indent=2, sort_keys=True) + "\n"


def loads_record(text: str) -> SnubRecord:
    return record_from_dict(json.loads(text))


def export_obj(poly: SkeletalPolyhedron) -> bytes:
    """Deterministic OBJ bytes: v lines at 17 significant digits, then one
    f record per face in stored cyclic order, 1-based; skew (non-planar)
    faces carry a preceding comment."""
    lines = []
    for row in poly.vertices:
        lines.append("v " + " ".join(f"{c:.17g}" for c in row))
    for f in poly.faces:
        pts = poly.vertices[list(f.cycle)]
        rel = pts - pts.mean(axis=0)
        svals = np.linalg.svd(rel, compute_uv=False)
        diam = 2.0 * float(np.max(np.linalg.norm(rel, axis=1)))
        if len(svals) > 2 and svals[2] >= 1e-7 * max(diam, 1e-30):
            lines.append("# skew")
        lines.append("f " + " ".join(str(i + 1) for i in f.cycle))
    return ("\n".join(lines) + "\n").encode("ascii")
