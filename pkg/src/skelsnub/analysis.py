"""Validation and combinatorial analysis of skeletal polyhedra.

Covers the polyhedron axioms, geometric polygon classification, vertex
symbols, f-vectors, Euler characteristic, orientability through the flag
graph, incidence-structure isomorphism, Petrie polygon tracing, and the
uniformity equations with their numerical solver.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .catalog import FundamentalCone, GeneratorTriple
from .errors import (
    DegeneratePolygon,
    NonCyclicVertexFigure,
    NotQuadrilateral,
)
from .geometry import apply
from .group import FiniteGroup, satisfies_ipc
from .snub import SkeletalPolyhedron, _sorted_pair, build_snub

PLANARITY_REL_TOL = 1e-7
REGULARITY_REL_TOL = 1e-7


# ---------------------------------------------------------------------------
# Polygon classification


@dataclass(frozen=True)
class PolygonClass:
    """Geometric class of one face: convex, star with a density, or skew.

    For skew polygons generated by a rotatory reflection the winding of the
    polygon projected along its symmetry axis is kept in density as well, so
    a fractional skew polygon renders as e.g. (10/3)_s instead of 10_s.
    """

    size: int
    kind: str  # "convex" | "star" | "skew"
    density: int | None
    planar: bool
    regular: bool
    edge_length: float
    irregular_flag: bool = False

    def token(self) -> str:
        if self.size == 3:
            return "3"
        if self.kind == "skew":
            if self.density and self.density >= 2:
                return f"({self.size}/{self.density})_s"
            return f"{self.size}_s"
        if self.kind == "star":
            return f"{self.size}/{self.density}"
        return f"{self.size}_c"


def _winding_number(points2d: np.ndarray) -> int | None:
    """Winding of a closed 2-D polygon around the origin, or None if it
    passes too close to the origin to tell."""
    radii = np.linalg.norm(points2d, axis=1)
    if np.min(radii) < 1e-9 * max(1.0, np.max(radii)):
        return None
    angles = np.arctan2(points2d[:, 1], points2d[:, 0])
    total = 0.0
    n = len(angles)
    for k in range(n):
        step = angles[(k + 1) % n] - angles[k]
        while step <= -math.pi:
            step += 2 * math.pi
        while step > math.pi:
            step -= 2 * math.pi
        total += step
    return int(round(total / (2 * math.pi)))


def _principal_axis(rel: np.ndarray) -> np.ndarray:
    """Most isolated eigenvector of the vertex covariance, used as the
    symmetry axis of a regular skew polygon."""
    cov = rel.T @ rel
    evals, evecs = np.linalg.eigh(cov)
    gaps = [
        abs(evals[0] - evals[1]) + abs(evals[0] - evals[2]),
        abs(evals[1] - evals[0]) + abs(evals[1] - evals[2]),
        abs(evals[2] - evals[0]) + abs(evals[2] - evals[1]),
    ]
    return evecs[:, int(np.argmax(gaps))]


def classify_polygon(points) -> PolygonClass:
    """Classify a cyclic vertex list as a convex, star, or skew polygon.

    Planarity is decided by the best-fit plane residual against
    1e-7 * diameter.  Planar regular polygons get a density from the winding
    number about the centroid (1 = convex, >= 2 = star); irregular planar
    polygons are reported as convex with a raised irregular flag.
    """
    pts = np.asarray(points, float)
    n = len(pts)
    if n < 3:
        raise DegeneratePolygon("polygon needs at least three vertices")
    centroid = pts.mean(axis=0)
    rel = pts - centroid
    edges = pts - np.roll(pts, -1, axis=0)
    edge_lengths = np.linalg.norm(edges, axis=1)
    if np.min(edge_lengths) < 1e-12:
        raise DegeneratePolygon("consecutive vertices coincide")
    diameter = float(
        max(np.linalg.norm(pts[i] - pts[j]) for i in range(n) for j in range(i + 1, n))
    )
    svals = np.linalg.svd(rel, compute_uv=False)
    if svals[1] < 1e-9 * max(diameter, 1.0):
        raise DegeneratePolygon("vertices are collinear")
    planar_residual = float(svals[2]) if len(svals) > 2 else 0.0
    planar = planar_residual < PLANARITY_REL_TOL * diameter

    radii = np.linalg.norm(rel, axis=1)
    chords2 = np.linalg.norm(pts - np.roll(pts, -2, axis=0), axis=1)
    tol = REGULARITY_REL_TOL * diameter
    regular = (
        float(radii.max() - radii.min()) < tol
        and float(edge_lengths.max() - edge_lengths.min()) < tol
        and float(chords2.max() - chords2.min()) < tol
    )
    mean_edge = float(edge_lengths.mean())

    if not planar:
        density = None
        if regular:
            axis = _principal_axis(rel)
            basis = _plane_basis(axis)
            density = _winding_number(rel @ basis.T)
            density = abs(density) if density else None
        return PolygonClass(n, "skew", density, False, regular, mean_edge)

    normal = np.linalg.svd(rel)[2][2]
    basis = _plane_basis(normal)
    if not regular:
        return PolygonClass(
            n, "convex", None, True, False, mean_edge, irregular_flag=True
        )
    winding = _winding_number(rel @ basis.T)
    d = abs(winding) if winding else 1
    if d >= 2:
        if math.gcd(n, d) != 1:
            raise DegeneratePolygon(f"improper star polygon {n}/{d}")
        return PolygonClass(n, "star", d, True, True, mean_edge)
    return PolygonClass(n, "convex", 1, True, True, mean_edge)


def _plane_basis(normal: np.ndarray) -> np.ndarray:
    """Two orthonormal vectors spanning the plane orthogonal to normal."""
    normal = normal / np.linalg.norm(normal)
    seed = np.array([1.0, 0.0, 0.0])
    if abs(float(normal @ seed)) > 0.9:
        seed = np.array([0.0, 1.0, 0.0])
    u = np.cross(normal, seed)
    u /= np.linalg.norm(u)
    v = np.cross(normal, u)
    return np.stack([u, v])


def face_classes(poly: SkeletalPolyhedron) -> list:
    """PolygonClass of every face, classified once."""
    return [classify_polygon(poly.face_points(i)) for i in range(len(poly.faces))]


# ---------------------------------------------------------------------------
# Vertex fans, symbols, figures


@dataclass(frozen=True)
class VertexSymbol:
    """Cyclic sequence of polygon tokens, canonical up to rotation and
    reversal."""

    tokens: tuple

    def text(self) -> str:
        return ".".join(self.tokens)

    def __repr__(self) -> str:
        return f"VertexSymbol({self.text()})"


def canonical_token_cycle(tokens) -> tuple:
    toks = tuple(tokens)
    best = None
    for seq in (toks, toks[::-1]):
        for shift in range(len(seq)):
            cand = seq[shift:] + seq[:shift]
            if best is None or cand < best:
                best = cand
    return best


def vertex_fan(poly: SkeletalPolyhedron, vertex: int):
    """Faces around a vertex in cyclic order, with the neighbor shared by
    each consecutive face pair.

    Returns (faces, neighbors) where neighbors[k] is the vertex on the edge
    shared by faces[k] and faces[(k+1) % len].  Raises NonCyclicVertexFigure
    when the faces at the vertex do not close into a single cycle.
    """
    lut = poly.edge_lookup()
    foe = poly.faces_of_edge()
    local = {}
    for fi in poly.faces_at_vertex()[vertex]:
        cyc = poly.faces[fi].cycle
        k = cyc.index(vertex)
        before = cyc[(k - 1) % len(cyc)]
        after = cyc[(k + 1) % len(cyc)]
        local[fi] = (
            lut[_sorted_pair(before, vertex)],
            lut[_sorted_pair(vertex, after)],
        )
    if not local:
        raise NonCyclicVertexFigure(f"vertex {vertex} lies in no face")
    start = min(local)
    exit_edge = max(local[start])
    faces = [start]
    neighbors = []
    current, edge = start, exit_edge
    while True:
        share = [fi for fi in foe[edge] if fi != current]
        if len(share) != 1:
            raise NonCyclicVertexFigure(
                f"edge {poly.edges[edge]} does not separate exactly two faces"
            )
        e = poly.edges[edge]
        neighbors.append(e.a if e.b == vertex else e.b)
        nxt = share[0]
        if nxt == start:
            if len(faces) != len(local):
                raise NonCyclicVertexFigure(
                    f"vertex {vertex} figure is not a single cycle"
                )
            return faces, neighbors
        if nxt in faces:
            raise NonCyclicVertexFigure(f"vertex {vertex} fan revisits a face")
        faces.append(nxt)
        pair = local[nxt]
        edge = pair[0] if pair[1] == edge else pair[1]
        current = nxt


def vertex_symbol(
    poly: SkeletalPolyhedron, vertex: int, classes: list | None = None
) -> VertexSymbol:
    """Vertex symbol: polygon tokens of the faces around the vertex."""
    faces, _ = vertex_fan(poly, vertex)
    if classes is None:
        classes = {fi: classify_polygon(poly.face_points(fi)) for fi in faces}
    tokens = [classes[fi].token() for fi in faces]
    return VertexSymbol(canonical_token_cycle(tokens))


def vertex_figure_shape(poly: SkeletalPolyhedron, vertex: int) -> str:
    """Classify a 4-valent vertex figure as "simple" or "crossed".

    The figure quadrilateral is projected onto its best-fit plane, and the
    two pairs of opposite edges are tested for proper intersection.
    """
    _, neighbors = vertex_fan(poly, vertex)
    if len(neighbors) != 4:
        raise NotQuadrilateral(f"vertex figure has {len(neighbors)} corners")
    pts = poly.vertices[neighbors]
    centroid = pts.mean(axis=0)
    rel = pts - centroid
    svals, vt = np.linalg.svd(rel)[1:]
    if svals[1] < 1e-9:
        raise NotQuadrilateral("figure corners are collinear")
    basis = vt[:2]
    flat = rel @ basis.T

    def crosses(p1, p2, p3, p4) -> bool:
        d1, d2 = p2 - p1, p4 - p3
        denom = d1[0] * d2[1] - d1[1] * d2[0]
        if abs(denom) < 1e-12:
            return False
        t = ((p3 - p1)[0] * d2[1] - (p3 - p1)[1] * d2[0]) / denom
        u = ((p3 - p1)[0] * d1[1] - (p3 - p1)[1] * d1[0]) / denom
        return 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9

    if crosses(flat[0], flat[1], flat[2], flat[3]) or crosses(
        flat[1], flat[2], flat[3], flat[0]
    ):
        return "crossed"
    return "simple"


# ---------------------------------------------------------------------------
# Axiom validation


@dataclass
class AxiomCheck:
    passed: bool
    detail: str
    witnesses: list = field(default_factory=list)


@dataclass
class ValidationReport:
    edge_graph_connected: AxiomCheck
    vertex_figures_connected: AxiomCheck
    edges_in_two_faces: AxiomCheck
    discrete: AxiomCheck
    figure_cycle_lengths: list

    @property
    def ok(self) -> bool:
        return all(
            c.passed
            for c in (
                self.edge_graph_connected,
                self.vertex_figures_connected,
                self.edges_in_two_faces,
                self.discrete,
            )
        )


def validate(poly: SkeletalPolyhedron) -> ValidationReport:
    """Check the skeletal polyhedron axioms and report per-axiom outcomes.

    (a) connected edge graph, (b) connected vertex figures (also reporting
    whether each is a single cycle and its length), (c) every edge in
    exactly two faces, (d) discreteness, trivial for finite data.
    """
    n = poly.vertex_count
    adjacency = poly.neighbors()
    seen = [False] * n
    if n:
        queue = deque([0])
        seen[0] = True
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    unreached = [i for i, s in enumerate(seen) if not s]
    conn = AxiomCheck(
        not unreached,
        "edge graph connected" if not unreached else "unreachable vertices",
        unreached,
    )

    foe = poly.faces_of_edge()
    bad_edges = [
        (poly.edges[ei], len(fids))
        for ei, fids in enumerate(foe)
        if len(fids) != 2
    ]
    two = AxiomCheck(
        not bad_edges,
        "every edge lies in exactly two faces"
        if not bad_edges
        else "edges with face count != 2",
        bad_edges,
    )

    figure_lengths: list = []
    bad_figures = []
    for v in range(n):
        nodes: dict = {}
        edges_fig = []
        for fi in poly.faces_at_vertex()[v]:
            cyc = poly.faces[fi].cycle
            k = cyc.index(v)
            a, b = cyc[(k - 1) % len(cyc)], cyc[(k + 1) % len(cyc)]
            nodes.setdefault(a, len(nodes))
            nodes.setdefault(b, len(nodes))
            edges_fig.append((nodes[a], nodes[b]))
        if not nodes:
            bad_figures.append(v)
            figure_lengths.append(None)
            continue
        adj: list = [[] for _ in nodes]
        for a, b in edges_fig:
            adj[a].append(b)
            adj[b].append(a)
        seen_f = [False] * len(nodes)
        queue = deque([0])
        seen_f[0] = True
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen_f[w]:
                    seen_f[w] = True
                    queue.append(w)
        connected = all(seen_f)
        is_cycle = connected and all(len(a) == 2 for a in adj) and len(
            edges_fig
        ) == len(nodes)
        figure_lengths.append(len(nodes) if is_cycle else None)
        if not connected:
            bad_figures.append(v)
    figs = AxiomCheck(
        not bad_figures,
        "all vertex figures connected"
        if not bad_figures
        else "disconnected vertex figures",
        bad_figures,
    )

    discrete = AxiomCheck(True, "finite complex is discrete")
    return ValidationReport(conn, figs, two, discrete, figure_lengths)


# ---------------------------------------------------------------------------
# f-vector and Euler characteristic


@dataclass(frozen=True)
class FVector:
    """Face counts by type; absent slots are None for degenerate cases."""

    f0: int
    f1: tuple
    f2: tuple

    @property
    def f1_total(self) -> int:
        return sum(c for c in self.f1 if c)

    @property
    def f2_total(self) -> int:
        return sum(c for c in self.f2 if c)

    def as_tuple(self) -> tuple:
        return (self.f0, *self.f1, *self.f2)


def fvector(poly: SkeletalPolyhedron) -> FVector:
    e_counts = [0, 0, 0]
    for e in poly.edges:
        e_counts[e.type] += 1
    f_counts = [0, 0, 0]
    for f in poly.faces:
        f_counts[f.type] += 1
    present_e = tuple(c if c else None for c in e_counts)
    present_f = tuple(c if c else None for c in f_counts)
    return FVector(poly.vertex_count, present_e, present_f)


def euler(poly: SkeletalPolyhedron) -> int:
    return poly.vertex_count - len(poly.edges) + len(poly.faces)


# ---------------------------------------------------------------------------
# Flags, orientability, Petrie polygons, isomorphism


@dataclass(eq=False)
class FlagSystem:
    """All (vertex, edge, face) flags with their three adjacency involutions."""

    flags: list
    adj0: np.ndarray
    adj1: np.ndarray
    adj2: np.ndarray

    def __len__(self) -> int:
        return len(self.flags)

    def adjacency(self, j: int) -> np.ndarray:
        return (self.adj0, self.adj1, self.adj2)[j]


def build_flags(poly: SkeletalPolyhedron) -> FlagSystem:
    """Flag set of a validated polyhedron with 0-, 1-, 2-adjacency maps.

    Requires every edge to lie in exactly two faces; the result is cached on
    the polyhedron.
    """
    cached = getattr(poly, "_flag_system", None)
    if cached is not None:
        return cached
    lut = poly.edge_lookup()
    foe = poly.faces_of_edge()
    flags: list = []
    flag_id: dict = {}
    for fi, face in enumerate(poly.faces):
        cyc = face.cycle
        m = len(cyc)
        for k in range(m):
            v = cyc[k]
            e_prev = lut[_sorted_pair(cyc[(k - 1) % m], v)]
            e_next = lut[_sorted_pair(v, cyc[(k + 1) % m])]
            for e in (e_prev, e_next):
                key = (v, e, fi)
                if key in flag_id:
                    raise ValueError(f"duplicate flag {key}; degenerate face")
                flag_id[key] = len(flags)
                flags.append(key)
    n = len(flags)
    adj0 = np.empty(n, dtype=np.int32)
    adj1 = np.empty(n, dtype=np.int32)
    adj2 = np.empty(n, dtype=np.int32)
    for idx, (v, e, fi) in enumerate(flags):
        edge = poly.edges[e]
        other_v = edge.a if edge.b == v else edge.b
        adj0[idx] = flag_id[(other_v, e, fi)]
        cyc = poly.faces[fi].cycle
        k = cyc.index(v)
        e_prev = lut[_sorted_pair(cyc[(k - 1) % len(cyc)], v)]
        e_next = lut[_sorted_pair(v, cyc[(k + 1) % len(cyc)])]
        adj1[idx] = flag_id[(v, e_next if e == e_prev else e_prev, fi)]
        both = foe[e]
        if len(both) != 2:
            raise ValueError("flag adjacency needs exactly two faces per edge")
        other_f = both[0] if both[1] == fi else both[1]
        adj2[idx] = flag_id[(v, e, other_f)]
    system = FlagSystem(flags, adj0, adj1, adj2)
    poly._flag_system = system
    return system


def orientable(poly: SkeletalPolyhedron) -> bool:
    """Bipartiteness of the flag adjacency graph.

    Equivalent to the existence of a globally consistent face orientation,
    which is orientability of the underlying surface map.
    """
    system = build_flags(poly)
    n = len(system)
    color = np.full(n, -1, dtype=np.int8)
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for adj in (system.adj0, system.adj1, system.adj2):
                w = int(adj[u])
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def trace_petrie(poly: SkeletalPolyhedron, flag: tuple) -> int:
    """Length of the closed Petrie polygon through a starting flag.

    State is a directed edge plus the face it is currently traversed in; at
    every step the walk leaves by the other edge of the face at the head
    vertex and switches to the other face of that edge, so any two but no
    three successive edges share a face.  Returns the number of edges walked
    until the starting state recurs.
    """
    v, e, fi = flag
    lut = poly.edge_lookup()
    foe = poly.faces_of_edge()
    edge = poly.edges[e]
    tail = edge.a if edge.b == v else edge.b
    state = (tail, v, fi)
    steps = 0
    current = state
    while True:
        tail_v, head_v, face_i = current
        cyc = poly.faces[face_i].cycle
        k = cyc.index(head_v)
        before, after = cyc[(k - 1) % len(cyc)], cyc[(k + 1) % len(cyc)]
        nxt = after if before == tail_v else before
        e_next = lut[_sorted_pair(head_v, nxt)]
        both = foe[e_next]
        if len(both) != 2:
            raise ValueError("Petrie walk needs two faces per edge")
        face_next = both[0] if both[1] == face_i else both[1]
        current = (head_v, nxt, face_next)
        steps += 1
        if current == state:
            return steps
        if steps > 4 * len(poly.edges):
            raise RuntimeError("Petrie walk failed to close")


def _flag_signature(poly: SkeletalPolyhedron, system: FlagSystem, idx: int):
    v, e, fi = system.flags[idx]
    return (len(poly.faces[fi].cycle), len(poly.faces_at_vertex()[v]))


def isomorphic(a: SkeletalPolyhedron, b: SkeletalPolyhedron) -> bool:
    """Incidence-structure isomorphism by anchored flag extension.

    A fixed flag of a is mapped to every compatible flag of b and the map is
    propagated along the three flag adjacencies; the polyhedra are
    isomorphic exactly when some seed extends consistently over all flags.
    Types and geometry are ignored; this is isomorphism of the underlying
    abstract polyhedra.
    """
    if a.vertex_count != b.vertex_count:
        return False
    if len(a.edges) != len(b.edges) or len(a.faces) != len(b.faces):
        return False
    sizes_a = sorted(len(f.cycle) for f in a.faces)
    sizes_b = sorted(len(f.cycle) for f in b.faces)
    if sizes_a != sizes_b:
        return False
    sys_a = build_flags(a)
    sys_b = build_flags(b)
    if len(sys_a) != len(sys_b):
        return False
    base = 0
    base_sig = _flag_signature(a, sys_a, base)
    adjs_a = (sys_a.adj0, sys_a.adj1, sys_a.adj2)
    adjs_b = (sys_b.adj0, sys_b.adj1, sys_b.adj2)
    n = len(sys_a)
    for candidate in range(n):
        if _flag_signature(b, sys_b, candidate) != base_sig:
            continue
        image = np.full(n, -1, dtype=np.int32)
        taken = np.zeros(n, dtype=bool)
        image[base] = candidate
        taken[candidate] = True
        queue = deque([base])
        good = True
        while queue and good:
            u = queue.popleft()
            for adj_a, adj_b in zip(adjs_a, adjs_b):
                ua, ub = int(adj_a[u]), int(adj_b[image[u]])
                if image[ua] == -1:
                    if taken[ub]:
                        good = False
                        break
                    image[ua] = ub
                    taken[ub] = True
                    queue.append(ua)
                elif image[ua] != ub:
                    good = False
                    break
        if good and np.all(image >= 0):
            return True
    return False


# ---------------------------------------------------------------------------
# Uniformity equations


def _difference_forms(gens: GeneratorTriple):
    """Quadratic forms whose values are the two uniformity residuals."""
    eye = np.eye(3)
    m1 = gens.s1.linear - eye
    m2 = gens.s0.linear - eye
    m3 = gens.s1.linear - gens.s0.linear
    q1 = m1.T @ m1 - m2.T @ m2
    q2 = m2.T @ m2 - m3.T @ m3
    return q1, q2


def uniformity_residual(gens: GeneratorTriple, v) -> tuple:
    """Residuals (|w1|^2 - |w2|^2, |w2|^2 - |w3|^2) of the uniformity
    equations, with w1 = s1 v - v, w2 = s0 v - v, w3 = s1 v - s0 v.

    Both vanish exactly when the closing triangle at v is equilateral.  The
    generators are linear, so the residuals are homogeneous quadratics.
    """
    v = np.asarray(v, float)
    w1 = apply(gens.s1, v) - v
    w2 = apply(gens.s0, v) - v
    w3 = apply(gens.s1, v) - apply(gens.s0, v)
    return (
        float(w1 @ w1 - w2 @ w2),
        float(w2 @ w2 - w3 @ w3),
    )


def uniformity_gradient(gens: GeneratorTriple, v) -> tuple:
    """Analytic gradients of the two residuals with respect to v."""
    q1, q2 = _difference_forms(gens)
    v = np.asarray(v, float)
    return ((q1 + q1.T) @ v, (q2 + q2.T) @ v)


@dataclass
class UniformRoot:
    """One acceptable solution of the uniformity equations."""

    point: np.ndarray
    residuals: tuple
    symbol: VertexSymbol | None
    ambiguous_faces: bool


def _cone_chart(cone: FundamentalCone):
    """Gnomonic chart centered on the cone axis.

    The chart direction(a, b) = normalize(axis + a*u + b*v) maps the plane
    polygon spanned by the projected rays exactly onto the cone's patch of
    the unit sphere, with no polar singularity inside the patch.
    """
    units = [s / np.linalg.norm(s) for s in cone.spanning]
    axis = np.sum(units, axis=0)
    axis /= np.linalg.norm(axis)
    u = np.cross(axis, np.array([1.0, 0.0, 0.0]))
    if np.linalg.norm(u) < 1e-8:
        u = np.cross(axis, np.array([0.0, 1.0, 0.0]))
    u /= np.linalg.norm(u)
    w = np.cross(axis, u)
    coords = []
    for s in units:
        t = float(s @ axis)
        if t <= 1e-9:
            raise ValueError("cone wider than a half space; chart unusable")
        coords.append(((s @ u) / t, (s @ w) / t))
    coords = np.array(coords)
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)
    return axis, u, w, lo, hi


def solve_uniformity(
    spec,
    gens: GeneratorTriple,
    cone: FundamentalCone,
    group: FiniteGroup,
    grid: int = 200,
    max_newton: int = 40,
    residual_tol: float = 1e-12,
    dedupe_tol: float = 1e-8,
) -> list:
    """Acceptable solutions of the uniformity equations inside the cone.

    The residuals are homogeneous, so the search lives on the unit sphere
    intersected with the closed cone.  A grid x grid scan over the cone's
    chart seeds damped-free Newton iterations on the two residuals; seeds
    with singular Jacobians are dropped.  Converged roots are kept when they
    lie in the closed cone, deduplicated at dedupe_tol, filtered by the
    initial placement condition, and returned sorted lexicographically with
    the vertex symbol of the snub each root generates.  An empty list is a
    valid outcome.
    """
    q1, q2 = _difference_forms(gens)
    q1 = 0.5 * (q1 + q1.T)
    q2 = 0.5 * (q2 + q2.T)
    axis, u, w, lo, hi = _cone_chart(cone)
    pad = 1e-9
    a_vals = np.linspace(lo[0] - pad, hi[0] + pad, grid)
    b_vals = np.linspace(lo[1] - pad, hi[1] + pad, grid)
    aa, bb = np.meshgrid(a_vals, b_vals, indexing="ij")
    ab = np.stack([aa.ravel(), bb.ravel()], axis=1)

    normals = np.array(cone.facet_normals)

    def directions(params: np.ndarray) -> np.ndarray:
        x = axis + params[:, :1] * u + params[:, 1:2] * w
        return x / np.linalg.norm(x, axis=1, keepdims=True)

    inside = np.all(directions(ab) @ normals.T >= -1e-9, axis=1)
    params = ab[inside].copy()

    active = np.ones(len(params), dtype=bool)
    for _ in range(max_newton):
        if not np.any(active):
            break
        cur = params[active]
        x = axis + cur[:, :1] * u + cur[:, 1:2] * w
        norms = np.linalg.norm(x, axis=1, keepdims=True)
        vdir = x / norms
        q1v = vdir @ q1
        q2v = vdir @ q2
        r1 = np.einsum("ni,ni->n", vdir, q1v)
        r2 = np.einsum("ni,ni->n", vdir, q2v)
        done = np.maximum(np.abs(r1), np.abs(r2)) < residual_tol
        # tangential derivative of vdir along u and w in chart coordinates
        du = (u - vdir * (vdir @ u)[:, None]) / norms
        dw = (w - vdir * (vdir @ w)[:, None]) / norms
        j11 = 2 * np.einsum("ni,ni->n", q1v, du)
        j12 = 2 * np.einsum("ni,ni->n", q1v, dw)
        j21 = 2 * np.einsum("ni,ni->n", q2v, du)
        j22 = 2 * np.einsum("ni,ni->n", q2v, dw)
        det = j11 * j22 - j12 * j21
        usable = (np.abs(det) > 1e-20) & ~done
        da = np.zeros(len(cur))
        db = np.zeros(len(cur))
        da[usable] = (-j22[usable] * r1[usable] + j12[usable] * r2[usable]) / det[
            usable
        ]
        db[usable] = (j21[usable] * r1[usable] - j11[usable] * r2[usable]) / det[
            usable
        ]
        cur[:, 0] += da
        cur[:, 1] += db
        params[active] = cur
        still = active.copy()
        still_idx = np.nonzero(active)[0]
        dropped = (~usable & ~done) | (np.max(np.abs(cur), axis=1) > 1e6)
        still[still_idx[dropped | done]] = False
        active[:] = still

    final = directions(params)
    q1r = np.einsum("ni,ij,nj->n", final, q1, final)
    q2r = np.einsum("ni,ij,nj->n", final, q2, final)
    converged = (np.abs(q1r) < residual_tol) & (np.abs(q2r) < residual_tol)
    in_cone = np.all(final @ normals.T >= -1e-9, axis=1)
    candidates = final[converged & in_cone]

    candidates = sorted(
        (tuple(float(c) for c in pt) for pt in candidates),
    )
    roots: list = []
    for pt in candidates:
        p = np.array(pt)
        if any(np.linalg.norm(p - r) <= dedupe_tol for r in roots):
            continue
        roots.append(p)

    out: list = []
    for p in roots:
        if not satisfies_ipc(group, p):
            continue
        res = uniformity_residual(gens, p)
        poly = build_snub(group, gens, p, name=spec.name)
        classes = face_classes(poly)
        ambiguous = False
        for fi in range(len(poly.faces)):
            pts = poly.face_points(fi)
            rel = pts - pts.mean(axis=0)
            svals = np.linalg.svd(rel, compute_uv=False)
            diam = 2.0 * float(np.max(np.linalg.norm(rel, axis=1)))
            resid = float(svals[2]) if len(svals) > 2 else 0.0
            ratio = resid / max(diam, 1e-30)
            if 0.1 * PLANARITY_REL_TOL < ratio < 10 * PLANARITY_REL_TOL:
                ambiguous = True
        symbol = vertex_symbol(poly, 0, classes)
        out.append(
            UniformRoot(
                point=p, residuals=res, symbol=symbol, ambiguous_faces=ambiguous
            )
        )
    return out
