import numpy as np
import pytest

from conftest import grp, load, parent_like, seed_snub
from skelsnub import analysis, catalog, converse, group, snub
from skelsnub.errors import NonUnique, NotVertexTransitive
from skelsnub.geometry import canonical_key, iso_order


def _element_keys(g):
    return {tuple(np.round(e.flat(), 9)) for e in g.elements}


def test_detect_symmetries_tetrahedron():
    T = parent_like("{3,3}")
    sym = converse.detect_symmetries(T)
    assert len(sym) == 24


def test_detect_symmetries_generic_snub_433():
    S = seed_snub("{4,3}_3")
    sym = converse.detect_symmetries(S)
    assert len(sym) == 24
    # simply transitive on 24 vertices, so vertex stabilizers are trivial
    assert len(sym) == S.vertex_count


def test_detect_symmetries_snub_cube_contains_construction_group():
    spec, gens, cone = load("{4,3}")
    g = grp("{4,3}")
    roots = analysis.solve_uniformity(spec, gens, cone, g)
    S = snub.build_snub(g, gens, roots[0].point, name="{4,3}")
    sym = converse.detect_symmetries(S)
    assert len(sym) >= 24
    assert _element_keys(g) <= _element_keys(sym)


def test_detect_symmetries_rejects_non_transitive():
    # square pyramid: apex and base vertices have different valence
    vertices = np.array(
        [
            [0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [-1.0, 0.0, 0.0],
            [0.0, -1.0, 0.0],
        ]
    )
    faces = [
        snub.Face((0, 1, 2), 0),
        snub.Face((0, 2, 3), 0),
        snub.Face((0, 3, 4), 0),
        snub.Face((0, 4, 1), 0),
        snub.Face((1, 2, 3, 4), 1),
    ]
    edges = []
    seen = set()
    for f in faces:
        cyc = f.cycle
        for k in range(len(cyc)):
            a, b = cyc[k], cyc[(k + 1) % len(cyc)]
            pair = (a, b) if a < b else (b, a)
            if pair not in seen:
                seen.add(pair)
                edges.append(snub.Edge(pair[0], pair[1], 0))
    pyramid = snub.SkeletalPolyhedron(vertices=vertices, edges=edges, faces=faces)
    with pytest.raises(NotVertexTransitive):
        converse.detect_symmetries(pyramid)


@pytest.mark.parametrize("name,count", [("{4,3}_3", 8), ("{10,3}_5", 40)])
def test_mark_special_triangles(name, count):
    S = seed_snub(name)
    marking = converse.mark_special_triangles(S)
    assert len(marking.marked_faces) == count
    type2 = {i for i, f in enumerate(S.faces) if f.type == 2}
    assert set(marking.marked_faces) == type2
    assert len(marking.marked_faces) * 3 == S.vertex_count


def test_mark_special_triangles_rejects_all_triangles():
    spec, gens, cone = load("{3,3}")
    g = grp("{3,3}")
    roots = analysis.solve_uniformity(spec, gens, cone, g)
    icosa = snub.build_snub(g, gens, roots[0].point, name="{3,3}")
    with pytest.raises(ValueError):
        converse.mark_special_triangles(icosa)


def test_marking_preserved_by_symmetries():
    S = seed_snub("{4,3}_3")
    marking = converse.mark_special_triangles(S)
    marked_cycles = {
        snub.canonical_cycle(
            tuple(canonical_key(p) for p in S.face_points(fi))
        )
        for fi in marking.marked_faces
    }
    sym = converse.detect_symmetries(S)
    for el in sym.elements[:8]:
        for fi in marking.marked_faces:
            pts = S.face_points(fi) @ el.linear.T + el.translation
            image = snub.canonical_cycle(tuple(canonical_key(p) for p in pts))
            assert image in marked_cycles


def test_find_rotations_recovers_construction_group():
    name = "{4,3}_3"
    S = seed_snub(name)
    sym = converse.detect_symmetries(S)
    witness = converse.make_witness(S)
    rot = converse.find_rotations(S, witness, sym)
    assert iso_order(rot.sigma1, cap=20) == 4
    assert iso_order(rot.sigma2, cap=20) == 3
    assert iso_order(rot.sigma0, cap=4) == 2
    recovered = group.close(
        catalog.GeneratorTriple(rot.sigma1, rot.sigma2, rot.sigma0)
    )
    assert _element_keys(recovered) == _element_keys(grp(name))


def test_find_rotations_icosahedron_nonunique():
    spec, gens, cone = load("{3,3}")
    g = grp("{3,3}")
    roots = analysis.solve_uniformity(spec, gens, cone, g)
    icosa = snub.build_snub(g, gens, roots[0].point, name="{3,3}")
    sym = converse.detect_symmetries(icosa)
    witness = converse.make_witness(icosa)
    with pytest.raises(NonUnique):
        converse.find_rotations(icosa, witness, sym)


@pytest.mark.parametrize(
    "name,parent_counts",
    [
        ("{4,3}", (8, 12, 6)),
        ("{4,3}_3", (4, 6, 3)),
        ("{6,4}_3", (6, 12, 4)),
    ],
)
def test_reconstruct_parent_round_trip(name, parent_counts):
    S = seed_snub(name)
    sym = converse.detect_symmetries(S)
    witness = converse.make_witness(S)
    rot = converse.find_rotations(S, witness, sym)
    result = converse.reconstruct_parent(S, rot, witness)
    parent = result.parent
    assert (
        parent.vertex_count,
        len(parent.edges),
        len(parent.faces),
    ) == parent_counts
    assert result.parent_valid
    assert result.round_trip_isomorphic
    assert result.round_trip_vertices_match
    n = len(result.group)
    spec, _, _ = load(name)
    k = result.stabilizer_index
    assert parent.vertex_count == n // (k * spec.q_order)
    assert len(parent.edges) == n // (k * 2)
    assert len(parent.faces) == n // (k * spec.p_order)


def test_reconstructed_cube_faces_are_squares():
    S = seed_snub("{4,3}")
    sym = converse.detect_symmetries(S)
    witness = converse.make_witness(S)
    rot = converse.find_rotations(S, witness, sym)
    result = converse.reconstruct_parent(S, rot, witness)
    for fi in range(len(result.parent.faces)):
        cls = analysis.classify_polygon(result.parent.face_points(fi))
        assert cls.size == 4 and cls.kind == "convex" and cls.regular
