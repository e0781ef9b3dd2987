"""Snub construction: orbit the base vertex, edges, and faces of a group.

The complex is assembled in element-index space.  After the vertex orbit is
deduplicated, every edge and face image is an index computation through the
multiplication table, so edge and face deduplication is exact and does not
touch geometry again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .catalog import GeneratorTriple
from .errors import DegenerateCollapse, MultiCoverage, TypeCollision
from .geometry import DedupIndex, apply, iso_order
from .group import FiniteGroup, TypeSet, type_set


class Edge(NamedTuple):
    a: int
    b: int
    type: int


class Face(NamedTuple):
    cycle: tuple
    type: int


class SnubSource(NamedTuple):
    name: str | None
    initial_vertex: tuple
    type_set: TypeSet


@dataclass(eq=False)
class SkeletalPolyhedron:
    """Indexed vertices, typed edges, and typed cyclic faces.

    vertex_group_element maps vertex index to the group element carrying the
    base vertex there; it is defined exactly when the initial placement
    condition holds and the action is simply vertex-transitive.
    """

    vertices: np.ndarray
    edges: list[Edge]
    faces: list[Face]
    vertex_group_element: list[int] | None = None
    source: SnubSource | None = None
    _edge_lookup: dict = field(default=None, repr=False)  # type: ignore[assignment]
    _faces_of_edge: list = field(default=None, repr=False)  # type: ignore[assignment]
    _faces_at_vertex: list = field(default=None, repr=False)  # type: ignore[assignment]
    _neighbors: list = field(default=None, repr=False)  # type: ignore[assignment]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_lookup(self) -> dict:
        """Map from sorted vertex pair to edge index."""
        if self._edge_lookup is None:
            self._edge_lookup = {
                (e.a, e.b): i for i, e in enumerate(self.edges)
            }
        return self._edge_lookup

    def faces_of_edge(self) -> list:
        """Edge index -> list of incident face indices."""
        if self._faces_of_edge is None:
            table = [[] for _ in self.edges]
            lut = self.edge_lookup()
            for fi, face in enumerate(self.faces):
                cyc = face.cycle
                for k in range(len(cyc)):
                    pair = _sorted_pair(cyc[k], cyc[(k + 1) % len(cyc)])
                    ei = lut.get(pair)
                    if ei is not None:
                        table[ei].append(fi)
            self._faces_of_edge = table
        return self._faces_of_edge

    def faces_at_vertex(self) -> list:
        if self._faces_at_vertex is None:
            table = [[] for _ in range(self.vertex_count)]
            for fi, face in enumerate(self.faces):
                for v in face.cycle:
                    table[v].append(fi)
            self._faces_at_vertex = table
        return self._faces_at_vertex

    def neighbors(self) -> list:
        if self._neighbors is None:
            table = [[] for _ in range(self.vertex_count)]
            for e in self.edges:
                table[e.a].append(e.b)
                table[e.b].append(e.a)
            self._neighbors = table
        return self._neighbors

    def face_points(self, face_index: int) -> np.ndarray:
        return self.vertices[list(self.faces[face_index].cycle)]


def _sorted_pair(a: int, b: int) -> tuple:
    return (a, b) if a <= b else (b, a)


def canonical_cycle(cycle) -> tuple:
    """Lexicographically smallest rotation of the cycle or its reversal."""
    cyc = tuple(cycle)
    n = len(cyc)
    best = None
    for seq in (cyc, cyc[::-1]):
        for shift in range(n):
            cand = seq[shift:] + seq[:shift]
            if best is None or cand < best:
                best = cand
    return best


@dataclass
class BaseComplex:
    """Base vertex, base edges, and base faces as explicit point data."""

    base_vertex: np.ndarray
    base_edges: dict
    base_faces: dict


def base_complex(gens: GeneratorTriple, v, iv: TypeSet) -> BaseComplex:
    """Base edges {v, s_i(v)} for i in the type set, plus the base faces.

    Faces with index 1 and 2 are the generator-orbit polygons of their base
    edge; the closing triangle (v, s0 v, s1 v) appears only when 0 is in the
    type set.
    """
    v = np.asarray(v, float)
    gen_by_type = {0: gens.s0, 1: gens.s1, 2: gens.s2}
    edges = {i: (v, apply(gen_by_type[i], v)) for i in iv}
    faces = {}
    for i in iv:
        if i == 0:
            continue
        order = iso_order(gen_by_type[i], cap=1000)
        pts = [v]
        for _ in range(order - 1):
            pts.append(apply(gen_by_type[i], pts[-1]))
        faces[i] = pts
    if 0 in iv:
        faces[0] = [v, apply(gens.s0, v), apply(gens.s1, v)]
    return BaseComplex(base_vertex=v, base_edges=edges, base_faces=faces)


def _base_cycles_as_indices(group: FiniteGroup, iv: TypeSet):
    """Base edges and faces expressed as group-element index tuples."""
    i1, i2, i0 = group.generator_indices
    gen_idx = {0: i0, 1: i1, 2: i2}
    edges = {i: (0, gen_idx[i]) for i in iv}
    faces = {}
    for i in iv:
        if i == 0:
            continue
        order = len(group.cyclic_subgroup(gen_idx[i]))
        faces[i] = tuple(group.power_indices(gen_idx[i], order))
    if 0 in iv:
        faces[0] = (0, i0, i1)
    return edges, faces


def build_snub(
    group: FiniteGroup,
    gens: GeneratorTriple,
    v,
    name: str | None = None,
) -> SkeletalPolyhedron:
    """Orbit the base complex of v under the group and deduplicate.

    Edge and face types come from the base element that produced them.  In
    the genuine case every edge and face has a unique type; a collision
    raises TypeCollision.  The one structural exception is an s0-fixed
    initial vertex, where s2(v) = s1^-1(v) forces the two edge orbits to
    coincide as segments; those edges keep the type under which they were
    first found.  Orbits that collapse to a single point raise
    DegenerateCollapse, and an edge lying in more than two faces raises
    MultiCoverage rather than passing silently.
    """
    v = np.asarray(v, float)
    if group.generator_indices is None:
        raise ValueError("group lacks generator indices; close() it from gens")
    images = group.orbit(v)
    spread = np.max(np.abs(images - v))
    if spread <= 1e-9:
        raise DegenerateCollapse("orbit of the initial vertex is a single point")

    iv = type_set(gens, v)

    vert_index = DedupIndex()
    vertex_of_element = [vert_index.add(images[i]) for i in range(len(group))]
    vertices = np.array(vert_index.items)

    vge = None
    if len(vertices) == len(group):
        vge = [0] * len(vertices)
        for elem, vtx in enumerate(vertex_of_element):
            vge[vtx] = elem
    edges_merge_allowed = iv.sorted() == (1, 2)

    base_edges, base_faces = _base_cycles_as_indices(group, iv)

    edge_types: dict = {}
    edge_order: list = []
    for etype in sorted(base_edges):
        e0, e1 = base_edges[etype]
        for g in range(len(group)):
            a = vertex_of_element[group.multiply(g, e0)]
            b = vertex_of_element[group.multiply(g, e1)]
            if a == b:
                raise DegenerateCollapse(
                    f"type-{etype} base edge collapses for this vertex"
                )
            pair = _sorted_pair(a, b)
            seen = edge_types.get(pair)
            if seen is None:
                edge_types[pair] = etype
                edge_order.append(pair)
            elif seen != etype and not edges_merge_allowed:
                raise TypeCollision(
                    f"edge {pair} appears in type {seen} and type {etype} orbits"
                )
    edges = [Edge(a, b, edge_types[(a, b)]) for a, b in edge_order]

    face_types: dict = {}
    face_cycles: dict = {}
    face_order: list = []
    for ftype in sorted(base_faces):
        cycle_elems = base_faces[ftype]
        for g in range(len(group)):
            cyc = tuple(
                vertex_of_element[group.multiply(g, c)] for c in cycle_elems
            )
            if len(set(cyc)) != len(cyc):
                raise DegenerateCollapse(
                    f"type-{ftype} base face degenerates for this vertex"
                )
            canon = canonical_cycle(cyc)
            seen = face_types.get(canon)
            if seen is None:
                face_types[canon] = ftype
                face_cycles[canon] = cyc
                face_order.append(canon)
            elif seen != ftype:
                raise TypeCollision(
                    f"face {canon} appears in type {seen} and type {ftype} orbits"
                )
    faces = [Face(face_cycles[c], face_types[c]) for c in face_order]

    poly = SkeletalPolyhedron(
        vertices=vertices,
        edges=edges,
        faces=faces,
        vertex_group_element=vge,
        source=SnubSource(name, tuple(float(c) for c in v), iv),
    )

    lut = poly.edge_lookup()
    for face in poly.faces:
        cyc = face.cycle
        for k in range(len(cyc)):
            pair = _sorted_pair(cyc[k], cyc[(k + 1) % len(cyc)])
            if pair not in lut:
                raise TypeCollision(f"face boundary pair {pair} is not an edge")
    overloaded = [
        (poly.edges[ei], fids)
        for ei, fids in enumerate(poly.faces_of_edge())
        if len(fids) > 2
    ]
    if overloaded:
        raise MultiCoverage(overloaded)
    return poly


@dataclass
class DegenerateReport:
    """Outcome of comparing a generator-fixed snub against its expected shape."""

    kind: str
    matches: bool | None
    vertex_count: int
    expected_vertices: int | None
    face_size: int | None
    notes: list


def degenerate_identity_check(
    snub: SkeletalPolyhedron, group: FiniteGroup, spec
) -> DegenerateReport:
    """Classify a degenerate snub against the parent, dual, or medial.

    For an s2-fixed vertex the snub should look like the parent: vertex
    count |G|/q when the vertex stabilizer is exactly the s2 rotation,
    all faces p-gons, and q faces around every vertex.  For s1-fixed the
    dual plays that role with p and q swapped.  An s0-fixed vertex is
    labeled the medial candidate without further checks.
    """
    iv = snub.source.type_set if snub.source else None
    if iv is None:
        raise ValueError("snub lacks source information")
    members = iv.sorted()
    notes = []
    if members == (1, 2):
        return DegenerateReport(
            kind="medial",
            matches=None,
            vertex_count=snub.vertex_count,
            expected_vertices=len(group) // 2,
            face_size=None,
            notes=["s0-fixed initial vertex; medial candidate"],
        )
    if members == (1,):
        kind, face_size, valence = "parent", spec.p_order, spec.q_order
    elif members == (2,):
        kind, face_size, valence = "dual", spec.q_order, spec.p_order
    else:
        raise ValueError("snub is not degenerate")
    expected = len(group) // valence

    ok = True
    if snub.vertex_count != expected:
        ok = False
        notes.append(
            f"vertex count {snub.vertex_count} != |G|/{valence} = {expected}"
        )
    sizes = {len(f.cycle) for f in snub.faces}
    if sizes != {face_size}:
        ok = False
        notes.append(f"face sizes {sorted(sizes)} != {{{face_size}}}")
    degree = [0] * snub.vertex_count
    for e in snub.edges:
        degree[e.a] += 1
        degree[e.b] += 1
    if set(degree) != {valence}:
        ok = False
        notes.append(f"vertex degrees {sorted(set(degree))} != {{{valence}}}")
    lengths = [
        float(np.linalg.norm(snub.vertices[e.a] - snub.vertices[e.b]))
        for e in snub.edges
    ]
    if max(lengths) - min(lengths) > 1e-9:
        ok = False
        notes.append("edge lengths are not all equal")
    radii = np.linalg.norm(snub.vertices, axis=1)
    if float(radii.max() - radii.min()) > 1e-9:
        ok = False
        notes.append("vertices are not equidistant from the origin")
    return DegenerateReport(
        kind=kind,
        matches=ok,
        vertex_count=snub.vertex_count,
        expected_vertices=expected,
        face_size=face_size,
        notes=notes,
    )
