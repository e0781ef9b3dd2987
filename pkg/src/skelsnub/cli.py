"""Command line interface.

Exit codes: 0 on success, 1 when construction or validation fails, 2 for
bad input (unknown names, malformed vertices or files).  The SKELSNUB_TOL
environment variable overrides the point tolerance (default 1e-9) and is
read at import time by the geometry module.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

import numpy as np

from . import analysis, catalog, converse, records, snub, tables
from .errors import SkelsnubError, UnknownPolyhedron
from .geometry import classify_fixed_set, project_to_fixed_set
from .group import close


class BadInput(Exception):
    pass


def _load(name: str):
    spec, gens, cone = catalog.lookup(name)
    return spec, gens, cone, close(gens)


def _parse_vertex(text: str, spec, gens, cone, group) -> np.ndarray:
    if text == "seed":
        return cone.seed
    if text == "uniform" or text.startswith("uniform:"):
        k = 0
        if ":" in text:
            try:
                k = int(text.split(":", 1)[1])
            except ValueError as exc:
                raise BadInput(f"bad uniform index in {text!r}") from exc
        roots = analysis.solve_uniformity(spec, gens, cone, group)
        if not roots:
            raise BadInput(f"{spec.name} has no acceptable uniform solution")
        if not 0 <= k < len(roots):
            raise BadInput(f"uniform root index {k} out of range 0..{len(roots) - 1}")
        return roots[k].point
    try:
        parts = [float(c) for c in text.split(",")]
    except ValueError as exc:
        raise BadInput(f"cannot parse vertex {text!r}") from exc
    if len(parts) != 3:
        raise BadInput(f"vertex needs 3 coordinates, got {len(parts)}")
    return np.array(parts)


def _make_record(name, spec, gens, group, vertex) -> tuple:
    poly = snub.build_snub(group, gens, vertex, name=name)
    report = analysis.validate(poly)
    symbol = None
    orient = None
    if report.ok:
        try:
            symbol = analysis.vertex_symbol(poly, 0).text()
        except SkelsnubError:
            symbol = None
        orient = analysis.orientable(poly)
    rec = records.SnubRecord(
        name=name,
        vertex=tuple(float(c) for c in vertex),
        type_set=poly.source.type_set.sorted(),
        fvector=analysis.fvector(poly),
        euler=analysis.euler(poly),
        symbol=symbol,
        orientable=orient,
        residuals=analysis.uniformity_residual(gens, vertex),
        polyhedron=poly,
    )
    return rec, report


def cmd_list(args) -> int:
    header = f"{'name':12s} {'p':>5s} {'q':>5s} {'|G+|':>5s} {'petrie':>6s} {'index2':>6s}  s0 fixed set"
    print(header)
    print("-" * len(header))
    for name in catalog.CATALOG_NAMES:
        spec, gens, cone = catalog.lookup(name)
        order = len(close(gens))
        kind = classify_fixed_set(gens.s0)
        petrie = str(spec.petrie_length) if spec.petrie_length else "-"
        print(
            f"{name:12s} {str(spec.p):>5s} {str(spec.q):>5s} {order:5d} "
            f"{petrie:>6s} {str(spec.index2).lower():>6s}  {kind.tag}"
        )
    return 0


def cmd_snub(args) -> int:
    spec, gens, cone, group = _load(args.poly)
    vertex = _parse_vertex(args.vertex, spec, gens, cone, group)
    if args.degenerate:
        gen = {"s0": gens.s0, "s1": gens.s1, "s2": gens.s2}[args.degenerate]
        vertex = project_to_fixed_set(gen, vertex)
    rec, report = _make_record(spec.name, spec, gens, group, vertex)
    payload = records.dumps_record(rec)
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if args.obj:
        with open(args.obj, "wb") as fh:
            fh.write(records.export_obj(rec.polyhedron))
    if not report.ok:
        print("validation FAILED:", file=sys.stderr)
        for check in (
            report.edge_graph_connected,
            report.vertex_figures_connected,
            report.edges_in_two_faces,
        ):
            if not check.passed:
                print(f"  {check.detail}: {check.witnesses}", file=sys.stderr)
        return 1
    return 0


def cmd_analyze(args) -> int:
    with open(args.file, "r", encoding="ascii") as fh:
        rec = records.loads_record(fh.read())
    poly = rec.polyhedron
    report = analysis.validate(poly)
    fv = analysis.fvector(poly)
    print(f"name: {rec.name}")
    print(f"f-vector: f0={fv.f0} f1={fv.f1} f2={fv.f2}")
    print(f"euler: {analysis.euler(poly)}")
    for label, check in (
        ("edge graph connected", report.edge_graph_connected),
        ("vertex figures connected", report.vertex_figures_connected),
        ("edges in two faces", report.edges_in_two_faces),
        ("discrete", report.discrete),
    ):
        status = "pass" if check.passed else f"FAIL {check.witnesses}"
        print(f"axiom {label}: {status}")
    if report.ok:
        lengths = sorted(set(report.figure_cycle_lengths))
        print(f"vertex figure cycle lengths: {lengths}")
        print(f"orientable: {analysis.orientable(poly)}")
        print(f"vertex symbol: {analysis.vertex_symbol(poly, 0).text()}")
    return 0 if report.ok else 1


def cmd_uniformity(args) -> int:
    spec, gens, cone, group = _load(args.poly)
    roots = analysis.solve_uniformity(spec, gens, cone, group, grid=args.grid)
    print(f"{spec.name}: {len(roots)} acceptable solution(s)")
    for i, root in enumerate(roots):
        pt = ", ".join(f"{c:.12f}" for c in root.point)
        flag = " (face class near planarity threshold)" if root.ambiguous_faces else ""
        print(
            f"  [{i}] v = ({pt})  residuals = ({root.residuals[0]:.3e}, "
            f"{root.residuals[1]:.3e})  symbol = {root.symbol.text()}{flag}"
        )
    return 0


def cmd_reconstruct(args) -> int:
    with open(args.file, "r", encoding="ascii") as fh:
        rec = records.loads_record(fh.read())
    poly = rec.polyhedron
    sym = converse.detect_symmetries(poly)
    witness = converse.make_witness(poly)
    rot = converse.find_rotations(poly, witness, sym)
    result = converse.reconstruct_parent(poly, rot, witness)
    parent = result.parent
    print(f"symmetry group order: {len(sym)}")
    print(f"rotation subgroup index: {rot.subgroup_index}")
    print(f"stabilizer index: {result.stabilizer_index}")
    print(
        f"parent: {parent.vertex_count} vertices, {len(parent.edges)} edges, "
        f"{len(parent.faces)} faces (axioms {'pass' if result.parent_valid else 'FAIL'})"
    )
    print(f"round trip isomorphic: {result.round_trip_isomorphic}")
    print(f"round trip vertex set equal: {result.round_trip_vertices_match}")
    ok = (
        result.parent_valid
        and result.round_trip_isomorphic
        and result.round_trip_vertices_match
    )
    return 0 if ok else 1


def _canonical_symbol(text: str) -> tuple:
    return analysis.canonical_token_cycle(tuple(text.split(".")))


def cmd_reproduce(args) -> int:
    failures = 0
    if args.section == 7:
        for name, (symbols, fv, chi) in tables.SECTION7_ROWS.items():
            spec, gens, cone, group = _load(name)
            poly = snub.build_snub(group, gens, cone.seed, name=name)
            got_fv = analysis.fvector(poly).as_tuple()
            got_chi = analysis.euler(poly)
            got_sym = analysis.vertex_symbol(poly, 0)
            sym_ok = got_sym.tokens in {_canonical_symbol(s) for s in symbols}
            row_ok = got_fv == fv and got_chi == chi and sym_ok
            status = "ok" if row_ok else "FAIL"
            print(
                f"{status:4s} {name:11s} f={got_fv} chi={got_chi} "
                f"symbol={got_sym.text()}"
            )
            if not row_ok:
                failures += 1
                if got_fv != fv:
                    print(f"     expected f={fv}")
                if got_chi != chi:
                    print(f"     expected chi={chi}")
                if not sym_ok:
                    print(f"     expected symbol in {symbols}")
    else:
        for name, (vertex, symbol, f0, f1, orbit_sizes) in tables.SECTION8_ROWS.items():
            spec, gens, cone, group = _load(name)
            poly = snub.build_snub(group, gens, np.array(vertex), name=name)
            got_f0 = poly.vertex_count
            got_f1 = len(poly.edges)
            got_orbits = tuple(sorted(Counter(f.type for f in poly.faces).values()))
            got_sym = analysis.vertex_symbol(poly, 0)
            crossed = all(
                analysis.vertex_figure_shape(poly, v) == "crossed"
                for v in range(poly.vertex_count)
            )
            row_ok = (
                got_f0 == f0
                and got_f1 == f1
                and got_orbits == tuple(sorted(orbit_sizes))
                and got_sym.tokens == _canonical_symbol(symbol)
                and crossed
            )
            status = "ok" if row_ok else "FAIL"
            print(
                f"{status:4s} {name:11s} f0={got_f0} f1={got_f1} "
                f"orbits={got_orbits} symbol={got_sym.text()} crossed={crossed}"
            )
            if not row_ok:
                failures += 1
                print(
                    f"     expected f0={f0} f1={f1} orbits={tuple(sorted(orbit_sizes))} "
                    f"symbol={symbol} crossed figures"
                )
    if failures:
        print(f"{failures} row(s) FAILED")
        return 1
    print("all rows match")
    return 0


def cmd_export(args) -> int:
    with open(args.file, "r", encoding="ascii") as fh:
        rec = records.loads_record(fh.read())
    with open(args.obj, "wb") as fh:
        fh.write(records.export_obj(rec.polyhedron))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelsnub",
        description="Construct and analyze skeletal snub polyhedra from the "
        "18 finite regular polyhedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the catalog").set_defaults(func=cmd_list)

    p_snub = sub.add_parser("snub", help="build and analyze one snub")
    p_snub.add_argument("--poly", required=True, help="catalog name or slug")
    p_snub.add_argument(
        "--vertex",
        required=True,
        help='"seed", "uniform[:k]", or "x,y,z"',
    )
    p_snub.add_argument(
        "--degenerate",
        choices=("s0", "s1", "s2"),
        help="project the vertex onto this generator's fixed set first",
    )
    p_snub.add_argument("--json", help="write the record here instead of stdout")
    p_snub.add_argument("--obj", help="also write an OBJ mesh here")
    p_snub.set_defaults(func=cmd_snub)

    p_an = sub.add_parser("analyze", help="re-validate a stored record")
    p_an.add_argument("file")
    p_an.set_defaults(func=cmd_analyze)

    p_uni = sub.add_parser("uniformity", help="solve the uniformity equations")
    p_uni.add_argument("--poly", required=True)
    p_uni.add_argument("--grid", type=int, default=200)
    p_uni.set_defaults(func=cmd_uniformity)

    p_rec = sub.add_parser("reconstruct", help="recover the parent polyhedron")
    p_rec.add_argument("file")
    p_rec.set_defaults(func=cmd_reconstruct)

    p_rep = sub.add_parser("reproduce", help="check the reference tables")
    p_rep.add_argument("--section", type=int, choices=(7, 8), required=True)
    p_rep.set_defaults(func=cmd_reproduce)

    p_exp = sub.add_parser("export", help="convert a stored record to OBJ")
    p_exp.add_argument("file")
    p_exp.add_argument("--obj", required=True)
    p_exp.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownPolyhedron, BadInput, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SkelsnubError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
