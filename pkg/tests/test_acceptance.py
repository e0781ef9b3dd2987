"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole suite is designed to stay under a minute on one core.
"""

import itertools
from collections import Counter
from fractions import Fraction

import numpy as np

from conftest import (
    EXPECTED_ORDERS,
    grp,
    hemicube_fixture,
    load,
    parent_like,
    random_ipc_points,
    seed_snub,
)
from skelsnub import analysis, catalog, converse, group, snub, tables
from skelsnub.errors import DegenerateCollapse
from skelsnub.geometry import classify_fixed_set, compose, iso_equal, iso_order
from skelsnub.cli import main as cli_main


def report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {criterion:2d}: {status} {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def _canon(text):
    return analysis.canonical_token_cycle(tuple(text.split(".")))


def test_criterion_01_catalog_integrity():
    problems = []
    for name in catalog.BASE_NAMES:
        spec, gens, _ = load(name)
        if iso_order(gens.s1, cap=30) != spec.p_order:
            problems.append(f"{name}: s1 order")
        if iso_order(gens.s2, cap=30) != spec.q_order:
            problems.append(f"{name}: s2 order")
        if iso_order(gens.s0, cap=30) != 2:
            problems.append(f"{name}: s0 order")
        stored = catalog._BASE_ROWS[name][7]
        from skelsnub.geometry import Isometry

        if not iso_equal(
            compose(gens.s1, gens.s2), Isometry(np.array(stored, float)), 1e-12
        ):
            problems.append(f"{name}: s1*s2 vs stored s0")
        if len(grp(name)) != EXPECTED_ORDERS[name]:
            problems.append(f"{name}: group order")
    report(1, not problems, "14 entries checked" + (f"; {problems}" if problems else ""))


def test_criterion_02_section7_reproduction():
    problems = []
    for name, (symbols, fv, chi) in tables.SECTION7_ROWS.items():
        S = seed_snub(name)
        if analysis.fvector(S).as_tuple() != fv:
            problems.append(f"{name}: f-vector {analysis.fvector(S).as_tuple()}")
        if analysis.euler(S) != chi:
            problems.append(f"{name}: chi {analysis.euler(S)}")
    report(2, not problems, "nine genuine rows" + (f"; {problems}" if problems else ""))


def test_criterion_03_euler_identity():
    problems = []
    for name in catalog.CATALOG_NAMES:
        spec, _, _ = load(name)
        S = seed_snub(name)
        n = len(grp(name))
        expected = n * (
            Fraction(1, spec.p_order) + Fraction(1, spec.q_order) - Fraction(1, 2)
        )
        if expected.denominator != 1 or analysis.euler(S) != expected.numerator:
            problems.append(name)
    report(3, not problems, f"chi = N(1/p+1/q-1/2) on {len(catalog.CATALOG_NAMES)} snubs")


def test_criterion_04_orientability():
    problems = []
    for name in catalog.PETRIE_DUAL_NAMES:
        if not analysis.orientable(seed_snub(name)):
            problems.append(name)
    if analysis.orientable(hemicube_fixture()):
        problems.append("hemicube fixture claimed orientable")
    report(4, not problems, "nine genuine snubs orientable, fixture not")


def test_criterion_05_isomorphism_invariance(rng):
    problems = []
    for name in catalog.CATALOG_NAMES:
        _, gens, _ = load(name)
        g = grp(name)
        pts = random_ipc_points(name, 3, rng)
        snubs = [snub.build_snub(g, gens, p, name=name) for p in pts]
        for a, b in itertools.combinations(snubs, 2):
            if not analysis.isomorphic(a, b):
                problems.append(name)
                break
    if not analysis.isomorphic(seed_snub("{6,5}"), seed_snub("{6,5/2}")):
        problems.append("{6,5} vs {6,5/2}")
    if analysis.isomorphic(seed_snub("{4,3}_3"), seed_snub("{6,3}_4")):
        problems.append("{4,3}_3 vs {6,3}_4 should differ")
    report(5, not problems, f"3 random placements x {len(catalog.CATALOG_NAMES)} entries")


def _edge_keys(S, etype):
    from skelsnub.geometry import canonical_key

    out = set()
    for e in S.edges:
        if e.type == etype:
            ka = canonical_key(S.vertices[e.a])
            kb = canonical_key(S.vertices[e.b])
            out.add((ka, kb) if ka <= kb else (kb, ka))
    return out


def _face_keys(S, ftype):
    from skelsnub.geometry import canonical_key

    return {
        snub.canonical_cycle(tuple(canonical_key(S.vertices[v]) for v in f.cycle))
        for f in S.faces
        if f.type == ftype
    }


def test_criterion_06_dual_congruence():
    problems = []
    for name in ("{4,3}", "{3,5}", "{5,5/2}"):
        _, gens, cone = load(name)
        g = grp(name)
        S = snub.build_snub(g, gens, cone.seed, name=name)
        dual_gens = catalog.dual_generators(gens)
        D = snub.build_snub(group.close(dual_gens), dual_gens, cone.seed)
        from skelsnub.geometry import canonical_key

        same_vertices = {canonical_key(p) for p in S.vertices} == {
            canonical_key(p) for p in D.vertices
        }
        swapped = (
            _face_keys(S, 1) == _face_keys(D, 2)
            and _face_keys(S, 2) == _face_keys(D, 1)
            and _face_keys(S, 0) == _face_keys(D, 0)
            and _edge_keys(S, 1) == _edge_keys(D, 2)
            and _edge_keys(S, 2) == _edge_keys(D, 1)
        )
        if not (same_vertices and swapped):
            problems.append(name)
    report(6, not problems, "three dual pairs share vertices, swap face types")


def test_criterion_07_uniformity():
    problems = []
    spec, gens, cone = load("{4,3}")
    g = grp("{4,3}")
    roots = analysis.solve_uniformity(spec, gens, cone, g)
    if not roots:
        problems.append("{4,3}: no root")
    else:
        S = snub.build_snub(g, gens, roots[0].point, name="{4,3}")
        lengths = [
            np.linalg.norm(S.vertices[e.a] - S.vertices[e.b]) for e in S.edges
        ]
        if len(lengths) != 60 or max(lengths) - min(lengths) > 1e-9:
            problems.append("{4,3}: edges unequal")
        if roots[0].symbol.tokens != _canon("4_c.3.3.3.3"):
            problems.append(f"{{4,3}}: symbol {roots[0].symbol.text()}")
    spec, gens, cone = load("{3,3}")
    g = grp("{3,3}")
    roots = analysis.solve_uniformity(spec, gens, cone, g)
    if not roots:
        problems.append("{3,3}: no root")
    icosa = parent_like("{3,5}")
    for root in roots:
        S = snub.build_snub(g, gens, root.point, name="{3,3}")
        if root.symbol.text() != "3.3.3.3.3" or not analysis.isomorphic(S, icosa):
            problems.append("{3,3}: root not an icosahedron")
    for name in catalog.PETRIE_DUAL_NAMES:
        spec, gens, cone = load(name)
        if analysis.solve_uniformity(spec, gens, cone, grp(name)):
            problems.append(f"{name}: unexpected acceptable root")
    for name in catalog.CATALOG_NAMES:
        spec, gens, _ = load(name)
        is_plane = classify_fixed_set(gens.s0).tag == "plane"
        if is_plane != spec.is_petrie_dual:
            problems.append(f"{name}: s0 plane classification")
    report(7, not problems, "snub cube, icosahedron, nine empties" + (f"; {problems}" if problems else ""))


def test_criterion_08_section8_reproduction():
    problems = []
    for name, (vertex, symbol, f0, f1, orbit_sizes) in tables.SECTION8_ROWS.items():
        _, gens, _ = load(name)
        S = snub.build_snub(grp(name), gens, np.array(vertex), name=name)
        got_orbits = tuple(sorted(Counter(f.type for f in S.faces).values()))
        sym = analysis.vertex_symbol(S, 0)
        crossed = all(
            analysis.vertex_figure_shape(S, v) == "crossed"
            for v in range(S.vertex_count)
        )
        ok = (
            S.vertex_count == f0
            and len(S.edges) == f1
            and got_orbits == tuple(sorted(orbit_sizes))
            and sym.tokens == _canon(symbol)
            and crossed
        )
        if not ok:
            problems.append(name)
    report(8, not problems, "nine degenerate rows, symbols and multisets")


def test_criterion_09_degenerate_identities():
    problems = []
    classical = [n for n in catalog.CATALOG_NAMES if not load(n)[0].is_petrie_dual]
    for name in classical:
        spec, gens, _ = load(name)
        g = grp(name)
        S = parent_like(name)
        rep = snub.degenerate_identity_check(S, g, spec)
        from skelsnub.geometry import project_to_fixed_set

        other = snub.build_snub(
            g, gens, project_to_fixed_set(gens.s2, np.array([0.3, 0.9, -0.4])),
            name=name,
        )
        if not (rep.kind == "parent" and rep.matches and analysis.isomorphic(S, other)):
            problems.append(name)
    for name in catalog.PETRIE_DUAL_NAMES:
        _, gens, _ = load(name)
        kind = classify_fixed_set(gens.s1)
        try:
            snub.build_snub(grp(name), gens, kind.anchor, name=name)
            problems.append(f"{name}: S1 did not collapse")
        except DegenerateCollapse:
            pass
    report(9, not problems, f"{len(classical)} parents similar; nine S1 collapses")


def test_criterion_10_converse_round_trip():
    problems = []
    for name in ("{4,3}", "{4,3}_3", "{6,4}_3"):
        S = seed_snub(name)
        sym = converse.detect_symmetries(S)
        witness = converse.make_witness(S)
        rot = converse.find_rotations(S, witness, sym)
        recovered = group.close(
            catalog.GeneratorTriple(rot.sigma1, rot.sigma2, rot.sigma0)
        )
        keys = lambda gg: {tuple(np.round(e.flat(), 9)) for e in gg.elements}
        if keys(recovered) != keys(grp(name)):
            problems.append(f"{name}: generators span a different group")
            continue
        result = converse.reconstruct_parent(S, rot, witness)
        if not (
            result.parent_valid
            and result.round_trip_isomorphic
            and result.round_trip_vertices_match
        ):
            problems.append(f"{name}: round trip failed")
    report(10, not problems, "three parents recovered and snubbed back")


def test_criterion_11_petrie_tracing():
    problems = []
    for name, expected in (("{4,3}", 6), ("{4,3}_3", 3), ("{6,3}_4", 4)):
        P = parent_like(name)
        system = analysis.build_flags(P)
        lengths = {analysis.trace_petrie(P, flag) for flag in system.flags}
        if lengths != {expected}:
            problems.append(f"{name}: {lengths}")
    report(11, not problems, "cube 6, hemicube 3, torus map 4, all flags agree")


def test_criterion_12_property_suite(rng, capsys):
    problems = []
    # orbit-stabilizer counting
    from skelsnub.geometry import DedupIndex

    for name in ("{4,3}", "{10,5}_3"):
        g = grp(name)
        _, gens, cone = load(name)
        for p in (cone.seed, np.array([0.2, 0.1, 0.9])):
            index = DedupIndex()
            for row in g.orbit(p):
                index.add(row)
            if len(index) * len(group.stabilizer(g, p)) != len(g):
                problems.append(f"{name}: orbit-stabilizer")
    # local structure of genuine snubs
    for name in ("{6,4}_3", "{10,3}_5"):
        S = seed_snub(name)
        spec, _, _ = load(name)
        n = len(grp(name))
        degrees = [0] * S.vertex_count
        pairs = set()
        for e in S.edges:
            degrees[e.a] += 1
            degrees[e.b] += 1
            pairs.add((e.a, e.b))
        if set(degrees) != {5}:
            problems.append(f"{name}: valence")
        if len(pairs) != len(S.edges):
            problems.append(f"{name}: duplicate edges across types")
        if any(len(f) != 2 for f in S.faces_of_edge()):
            problems.append(f"{name}: edge face count")
        e_counts = Counter(e.type for e in S.edges)
        f_counts = Counter(f.type for f in S.faces)
        if (e_counts[0], e_counts[1], e_counts[2]) != (n // 2, n, n):
            problems.append(f"{name}: edge type counts")
        if (f_counts[0], f_counts[1], f_counts[2]) != (
            n,
            n // spec.p_order,
            n // spec.q_order,
        ):
            problems.append(f"{name}: face type counts")
        classes = analysis.face_classes(S)
        symbols = {
            analysis.vertex_symbol(S, v, classes).tokens
            for v in range(S.vertex_count)
        }
        if len(symbols) != 1:
            problems.append(f"{name}: vertex symbol varies")
    # residual gradient against central differences
    for name in ("{4,3}", "{6,5}"):
        _, gens, _ = load(name)
        for _ in range(4):
            v = rng.random(3) + 0.1
            grads = analysis.uniformity_gradient(gens, v)
            for pick in (0, 1):
                fd = np.zeros(3)
                for i in range(3):
                    e = np.zeros(3)
                    e[i] = 1e-6
                    fd[i] = (
                        analysis.uniformity_residual(gens, v + e)[pick]
                        - analysis.uniformity_residual(gens, v - e)[pick]
                    ) / 2e-6
                scale = max(np.linalg.norm(grads[pick]), 1e-12)
                if np.linalg.norm(fd - grads[pick]) / scale > 1e-5:
                    problems.append(f"{name}: gradient mismatch")
    # deterministic byte-identical command output
    code1 = cli_main(["snub", "--poly", "{6,4}_3", "--vertex", "seed"])
    out1 = capsys.readouterr().out
    code2 = cli_main(["snub", "--poly", "{6,4}_3", "--vertex", "seed"])
    out2 = capsys.readouterr().out
    if code1 != 0 or code2 != 0 or out1 != out2:
        problems.append("cli output not byte-identical")
    report(12, not problems, "all property checks" + (f"; {problems}" if problems else ""))
