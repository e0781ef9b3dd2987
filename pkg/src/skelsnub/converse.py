"""Converse construction: from a polyhedron of snub type back to its parent.

Given a vertex-transitive polyhedron whose vertices are surrounded by a
p-gon, two triangles, a q-gon, and a triangle, this module finds the two
rotations that cycle the p-gon and the q-gon at a base vertex, rebuilds the
parent as an orbit structure over the group they generate, and checks that
snubbing the parent reproduces the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import GeneratorTriple
from .errors import (
    MarkingInconsistent,
    NonUnique,
    NoSuchSymmetry,
    NotVertexTransitive,
    StabilizerMismatch,
)
from .geometry import (
    DedupIndex,
    Isometry,
    apply,
    canonical_key,
    compose,
    is_identity,
    iso_order,
    points_equal,
)
from .group import FiniteGroup, close, group_from_elements
from .snub import SkeletalPolyhedron, Edge, Face, build_snub, canonical_cycle
from .analysis import isomorphic, validate, vertex_fan


def _vertex_key_index(poly: SkeletalPolyhedron) -> DedupIndex:
    idx = DedupIndex()
    for p in poly.vertices:
        idx.add(p)
    return idx


def _permutation_of_vertices(poly, index, iso) -> list | None:
    """Vertex permutation induced by iso, or None when it is not one."""
    images = poly.vertices @ iso.linear.T + iso.translation
    perm = []
    for row in images:
        j = index.find(row)
        if j is None:
            return None
        perm.append(j)
    if len(set(perm)) != len(perm):
        return None
    return perm


def _preserves_structure(poly, perm, face_set) -> bool:
    edge_set = poly.edge_lookup()
    for e in poly.edges:
        a, b = perm[e.a], perm[e.b]
        if (a, b) not in edge_set and (b, a) not in edge_set:
            return False
    for f in poly.faces:
        if canonical_cycle(tuple(perm[v] for v in f.cycle)) not in face_set:
            return False
    return True


def detect_symmetries(poly: SkeletalPolyhedron) -> FiniteGroup:
    """Full isometric symmetry group of a finite vertex-transitive polyhedron.

    Candidate isometries map a frame at the base vertex (the vertex, two
    independent neighbors) onto frames at every vertex; candidates that are
    orthogonal about the centroid and permute vertices, edges, and faces are
    kept.  Raises NotVertexTransitive when some vertex is not reached.
    """
    centroid = poly.vertices.mean(axis=0)
    rel = poly.vertices - centroid
    index = _vertex_key_index(poly)
    nbrs = poly.neighbors()
    base = 0
    base_frame = None
    for i in range(len(nbrs[base])):
        for j in range(len(nbrs[base])):
            if i == j:
                continue
            m = np.stack(
                [rel[base], rel[nbrs[base][i]], rel[nbrs[base][j]]], axis=1
            )
            if abs(np.linalg.det(m)) > 1e-9:
                base_frame = (nbrs[base][i], nbrs[base][j], m)
                break
        if base_frame is not None:
            break
    if base_frame is None:
        raise NotVertexTransitive("base vertex frame is degenerate")
    _, _, m_base = base_frame
    m_base_inv = np.linalg.inv(m_base)
    face_set = {canonical_cycle(f.cycle) for f in poly.faces}

    found: list[Isometry] = []
    seen = DedupIndex(tol=1e-9)
    reached = set()
    for target in range(poly.vertex_count):
        for na in nbrs[target]:
            for nb in nbrs[target]:
                if na == nb:
                    continue
                m_target = np.stack([rel[target], rel[na], rel[nb]], axis=1)
                linear = m_target @ m_base_inv
                if np.max(np.abs(linear.T @ linear - np.eye(3))) > 1e-8:
                    continue
                iso = Isometry(linear, centroid - linear @ centroid)
                if seen.find(iso.flat()) is not None:
                    continue
                perm = _permutation_of_vertices(poly, index, iso)
                if perm is None or perm[base] != target:
                    continue
                if not _preserves_structure(poly, perm, face_set):
                    continue
                seen.add(iso.flat())
                found.append(iso)
                reached.add(target)
    if len(reached) != poly.vertex_count:
        missing = sorted(set(range(poly.vertex_count)) - reached)
        raise NotVertexTransitive(f"no symmetry reaches vertices {missing}")
    return group_from_elements(found)


# ---------------------------------------------------------------------------
# Special triangles and the snub-type witness


@dataclass
class TriangleMarking:
    marked_faces: tuple
    per_vertex: dict


def mark_special_triangles(poly: SkeletalPolyhedron) -> TriangleMarking:
    """Mark, at every vertex, the one triangle sharing no edge with a p-gon.

    Requires vertex symbol p.3.3.3.3 with p > 3: five faces around every
    vertex, exactly one of them a p-gon.  Raises MarkingInconsistent when
    the case analysis fails, which means the input is not of snub type.
    """
    sizes = {len(f.cycle) for f in poly.faces}
    non_tri = sorted(s for s in sizes if s != 3)
    if len(non_tri) != 1 or 3 not in sizes:
        raise ValueError(
            f"expected triangles plus one larger face size, got {sorted(sizes)}"
        )
    p = non_tri[0]
    foe = poly.faces_of_edge()
    lut = poly.edge_lookup()

    def touches_pgon(face_index: int) -> bool:
        cyc = poly.faces[face_index].cycle
        for k in range(len(cyc)):
            a, b = cyc[k], cyc[(k + 1) % len(cyc)]
            ei = lut[(a, b) if a <= b else (b, a)]
            for other in foe[ei]:
                if other != face_index and len(poly.faces[other].cycle) == p:
                    return True
        return False

    per_vertex = {}
    marked = set()
    for v in range(poly.vertex_count):
        fan, _ = vertex_fan(poly, v)
        if len(fan) != 5:
            raise MarkingInconsistent(f"vertex {v} has {len(fan)} faces, not 5")
        tris = [fi for fi in fan if len(poly.faces[fi].cycle) == 3]
        if len(tris) != 4:
            raise MarkingInconsistent(
                f"vertex {v} is not of symbol {p}.3.3.3.3"
            )
        special = [fi for fi in tris if not touches_pgon(fi)]
        if len(special) != 1:
            raise MarkingInconsistent(
                f"vertex {v} has {len(special)} special triangles"
            )
        per_vertex[v] = special[0]
        marked.add(special[0])
    return TriangleMarking(tuple(sorted(marked)), per_vertex)


@dataclass
class SnubTypeWitness:
    """Base vertex with its neighbors and faces labeled around the symbol
    p.3.3.q.3: faces = (F_p, F_1, F_2, F_q, F_3), neighbors = (v1..v5)."""

    vertex: int
    neighbors: tuple
    faces: tuple


def make_witness(poly: SkeletalPolyhedron, vertex: int = 0) -> SnubTypeWitness:
    """Deterministic witness at a vertex: p-face first, q-face in slot 3.

    When the symbol is p.3.3.3.3 the q-face is the special triangle at the
    vertex; when p = q = 3 no labeling is distinguished and slots are taken
    from the fan as-is.
    """
    fan, nbrs = vertex_fan(poly, vertex)
    if len(fan) != 5:
        raise MarkingInconsistent(
            f"vertex {vertex} has {len(fan)} faces; snub type needs 5"
        )
    sizes = [len(poly.faces[fi].cycle) for fi in fan]
    big = sorted(set(sizes) - {3})

    def rotations():
        cyc_f = list(fan)
        cyc_n = list(nbrs)
        for _ in range(5):
            yield tuple(cyc_f), tuple(cyc_n)
            # rotate so faces[0] advances; neighbor k sits between
            # faces[k] and faces[k+1], so neighbors rotate in step
            cyc_f = cyc_f[1:] + cyc_f[:1]
            cyc_n = cyc_n[1:] + cyc_n[:1]
        cyc_f = [fan[0]] + list(fan[:0:-1])
        cyc_n = list(nbrs[::-1])
        for _ in range(5):
            yield tuple(cyc_f), tuple(cyc_n)
            cyc_f = cyc_f[1:] + cyc_f[:1]
            cyc_n = cyc_n[1:] + cyc_n[:1]

    def is_labeling(faces, p_face_ok, q_face_ok):
        return (
            p_face_ok(faces[0])
            and all(len(poly.faces[faces[k]].cycle) == 3 for k in (1, 2, 4))
            and q_face_ok(faces[3])
        )

    if len(big) == 2:
        # either big size can play the p-gon; try the larger first
        for p_size, q_size in ((big[1], big[0]), (big[0], big[1])):
            for faces, ns in rotations():
                if is_labeling(
                    faces,
                    lambda f: len(poly.faces[f].cycle) == p_size,
                    lambda f: len(poly.faces[f].cycle) == q_size,
                ):
                    return SnubTypeWitness(vertex, ns, faces)
        raise MarkingInconsistent("no p.3.3.q.3 labeling fits the fan")
    if len(big) == 1:
        marking = mark_special_triangles(poly)
        special = marking.per_vertex[vertex]
        for faces, ns in rotations():
            if is_labeling(
                faces,
                lambda f: len(poly.faces[f].cycle) == big[0],
                lambda f: f == special,
            ):
                return SnubTypeWitness(vertex, ns, faces)
        raise MarkingInconsistent("special triangle does not sit opposite the p-gon")
    # all triangles: no distinguished labeling, take the fan as found
    return SnubTypeWitness(vertex, tuple(nbrs), tuple(fan))


@dataclass
class RotationPair:
    """The two rotations of the converse, with the index of the subgroup
    they generate inside the supplied symmetry group."""

    sigma1: Isometry
    sigma2: Isometry
    subgroup_index: int

    @property
    def sigma0(self) -> Isometry:
        return compose(self.sigma1, self.sigma2)


def _face_point_set(poly, face_index) -> set:
    return {canonical_key(p) for p in poly.face_points(face_index)}


def find_rotations(
    poly: SkeletalPolyhedron, witness: SnubTypeWitness, sym: FiniteGroup
) -> RotationPair:
    """Unique symmetries cycling the p-face and the q-face at the witness.

    sigma1 must carry the base vertex to its p-face successor while fixing
    the p-face; sigma2 likewise for the q-face.  Their orders must be the
    face sizes and their product an involution.  Raises NoSuchSymmetry or
    NonUnique when the hypotheses of the converse fail.
    """
    v_pt = poly.vertices[witness.vertex]
    v2_pt = poly.vertices[witness.neighbors[0]]
    v5_pt = poly.vertices[witness.neighbors[3]]
    fp_cycle = poly.faces[witness.faces[0]].cycle
    fq_cycle = poly.faces[witness.faces[3]].cycle
    fp_keys = _face_point_set(poly, witness.faces[0])
    fq_keys = _face_point_set(poly, witness.faces[3])

    def candidates(target_pt, cycle, face_keys):
        out = []
        for g in sym.elements:
            if not points_equal(apply(g, v_pt), target_pt):
                continue
            mapped = {canonical_key(apply(g, poly.vertices[i])) for i in cycle}
            if mapped == face_keys:
                out.append(g)
        return out

    c1 = candidates(v2_pt, fp_cycle, fp_keys)
    c2 = candidates(v5_pt, fq_cycle, fq_keys)
    if not c1 or not c2:
        raise NoSuchSymmetry("no symmetry cycles the p-face or q-face")
    if len(c1) > 1 or len(c2) > 1:
        raise NonUnique(
            f"{len(c1)} candidates for sigma1, {len(c2)} for sigma2"
        )
    sigma1, sigma2 = c1[0], c2[0]
    p = len(poly.faces[witness.faces[0]].cycle)
    q = len(poly.faces[witness.faces[3]].cycle)
    if iso_order(sigma1, cap=4 * p) != p:
        raise NoSuchSymmetry(f"sigma1 does not have order {p}")
    if iso_order(sigma2, cap=4 * q) != q:
        raise NoSuchSymmetry(f"sigma2 does not have order {q}")
    sigma0 = compose(sigma1, sigma2)
    if is_identity(sigma0) or not is_identity(compose(sigma0, sigma0)):
        raise NoSuchSymmetry("sigma1*sigma2 is not an involution")
    sub = close(GeneratorTriple(sigma1, sigma2, sigma0))
    if len(sym) % len(sub):
        raise NoSuchSymmetry("generated subgroup does not divide the group")
    return RotationPair(sigma1, sigma2, len(sym) // len(sub))


# ---------------------------------------------------------------------------
# Parent reconstruction


@dataclass
class ReconstructionResult:
    parent: SkeletalPolyhedron
    group: FiniteGroup
    stabilizer_index: int
    parent_valid: bool
    round_trip: SkeletalPolyhedron
    round_trip_isomorphic: bool
    round_trip_vertices_match: bool


def _pair_stabilizer(group: FiniteGroup, vertex_of_element, elem_pair) -> list:
    """Elements preserving an edge given by two element indices."""
    base = tuple(sorted(vertex_of_element[e] for e in elem_pair))
    out = []
    for g in range(len(group)):
        pair = tuple(
            sorted(vertex_of_element[group.multiply(g, e)] for e in elem_pair)
        )
        if pair == base:
            out.append(g)
    return out


def _cycle_stabilizer(group: FiniteGroup, vertex_of_element, cycle_elems) -> list:
    """Elements preserving a face given as a cycle of element indices.

    The face is compared as a cyclic polygon, not as a vertex set; parents
    like the hemi-cube have several faces through the same vertex set.
    """
    base = canonical_cycle(tuple(vertex_of_element[c] for c in cycle_elems))
    out = []
    for g in range(len(group)):
        cyc = tuple(vertex_of_element[group.multiply(g, c)] for c in cycle_elems)
        if canonical_cycle(cyc) == base:
            out.append(g)
    return out


def reconstruct_parent(
    poly: SkeletalPolyhedron,
    rot: RotationPair,
    witness: SnubTypeWitness | None = None,
) -> ReconstructionResult:
    """Rebuild the parent polyhedron from the rotation pair.

    The base vertex of the parent is the center of the q-face; the base
    edge joins it to its sigma1 image and the base face is its sigma1
    orbit.  The stabilizers of these seeds inside A = <sigma1, sigma2> must
    be the corresponding cyclic subgroups, either exactly or uniformly
    doubled by orientation-reversing elements when A contains improper
    isometries; any other pattern raises StabilizerMismatch (overlapping
    q-gons sharing a center).  The result carries the parent, the snub
    rebuilt from it at the original base vertex, and whether that round
    trip reproduces the input.
    """
    if witness is None:
        witness = make_witness(poly)
    sigma1, sigma2 = rot.sigma1, rot.sigma2
    sigma0 = compose(sigma1, sigma2)
    a_group = close(GeneratorTriple(sigma1, sigma2, sigma0))
    i1, i2, i0 = a_group.generator_indices

    u = poly.face_points(witness.faces[3]).mean(axis=0)
    p_order = len(a_group.cyclic_subgroup(i1))

    orbit_u = a_group.orbit(u)
    vert_index = DedupIndex()
    vertex_of_element = [vert_index.add(orbit_u[i]) for i in range(len(a_group))]
    vertices = np.array(vert_index.items)

    stab_v = [
        i
        for i in range(len(a_group))
        if vertex_of_element[i] == vertex_of_element[0]
    ]
    stab_e = _pair_stabilizer(a_group, vertex_of_element, (0, i1))
    face_elems = a_group.power_indices(i1, p_order)
    stab_f = _cycle_stabilizer(a_group, vertex_of_element, face_elems)

    cyc_v = a_group.cyclic_subgroup(i2)
    cyc_e = a_group.cyclic_subgroup(i0)
    cyc_f = a_group.cyclic_subgroup(i1)
    ratios = (
        len(stab_v) // len(cyc_v),
        len(stab_e) // len(cyc_e),
        len(stab_f) // len(cyc_f),
    )
    exact = (
        sorted(stab_v) == cyc_v
        and sorted(stab_e) == cyc_e
        and sorted(stab_f) == cyc_f
    )
    has_improper = any(g.det < 0 for g in a_group.elements)
    uniform_double = (
        ratios == (2, 2, 2)
        and has_improper
        and all(
            len(s) == 2 * len(c)
            for s, c in zip((stab_v, stab_e, stab_f), (cyc_v, cyc_e, cyc_f))
        )
    )
    if not (exact or uniform_double):
        raise StabilizerMismatch(
            f"seed stabilizer sizes {tuple(map(len, (stab_v, stab_e, stab_f)))} "
            f"vs cyclic {tuple(map(len, (cyc_v, cyc_e, cyc_f)))}"
        )
    stab_index = 1 if exact else 2

    edge_base = (0, i1)
    edges_seen = {}
    edge_list = []
    for g in range(len(a_group)):
        a = vertex_of_element[a_group.multiply(g, edge_base[0])]
        b = vertex_of_element[a_group.multiply(g, edge_base[1])]
        pair = (a, b) if a <= b else (b, a)
        if pair not in edges_seen:
            edges_seen[pair] = True
            edge_list.append(Edge(pair[0], pair[1], 0))
    face_seen = {}
    face_list = []
    for g in range(len(a_group)):
        cyc = tuple(vertex_of_element[a_group.multiply(g, c)] for c in face_elems)
        canon = canonical_cycle(cyc)
        if canon not in face_seen:
            face_seen[canon] = True
            face_list.append(Face(cyc, 1))
    parent = SkeletalPolyhedron(
        vertices=vertices,
        edges=edge_list,
        faces=face_list,
        vertex_group_element=None,
        source=None,
    )
    parent_valid = validate(parent).ok

    v_pt = poly.vertices[witness.vertex]
    rebuilt = build_snub(
        a_group, GeneratorTriple(sigma1, sigma2, sigma0), v_pt, name="round-trip"
    )
    iso_ok = isomorphic(rebuilt, poly)
    keys_a = {canonical_key(p) for p in rebuilt.vertices}
    keys_b = {canonical_key(p) for p in poly.vertices}
    return ReconstructionResult(
        parent=parent,
        group=a_group,
        stabilizer_index=stab_index,
        parent_valid=parent_valid,
        round_trip=rebuilt,
        round_trip_isomorphic=iso_ok,
        round_trip_vertices_match=keys_a == keys_b,
    )
