"""Catalog of the 18 finite regular polyhedra and their rotation data.

Fourteen entries carry explicit generator matrices for s1 and s2 together
with a stored s0 column; the loader recomputes s0 = s1*s2 and checks it
against the stored column to catch transcription slips.  The remaining four
entries are geometric duals of listed ones and are derived on the fly via
dual_generators, sharing their partner's fundamental cone and seed point.

Every entry also records a fundamental cone for the combinatorial rotation
subgroup: the open convex cone with apex at the origin spanned by a small
set of vectors, realized as the Dirichlet-Voronoi cell of a seed point w.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import UnknownPolyhedron
from .geometry import (
    Isometry,
    compose,
    inverse,
    iso_equal,
    iso_order,
    vector3,
)

R2 = math.sqrt(2.0)
R5 = math.sqrt(5.0)
AL = (1.0 + R5) / 4.0
BE = (R5 - 1.0) / 4.0

CONE_TOL = 1e-12


@dataclass(frozen=True)
class PolyhedronSpec:
    """Schlafli data and bookkeeping for one catalog entry."""

    name: str
    p: Fraction
    q: Fraction
    petrie_length: int | None
    index2: bool
    dual_of: str | None
    is_petrie_dual: bool

    @property
    def p_order(self) -> int:
        """Rotation order of s1 (the numerator of p)."""
        return self.p.numerator

    @property
    def q_order(self) -> int:
        return self.q.numerator


@dataclass(frozen=True, eq=False)
class GeneratorTriple:
    s1: Isometry
    s2: Isometry
    s0: Isometry


@dataclass(frozen=True, eq=False)
class FundamentalCone:
    """Open convex cone with apex 0, plus its interior seed point."""

    spanning: tuple
    facet_normals: tuple
    seed: np.ndarray


def _mat(rows) -> Isometry:
    return Isometry(np.array(rows, dtype=float))


# Non-icosahedral generators.  In the source table these rows use the
# shorthands a = x + y and b = x - y, expanded to matrices here.
_S1_33 = [[0.5, -0.5, 1 / R2], [0.5, -0.5, -1 / R2], [1 / R2, 1 / R2, 0.0]]
_S2_33 = [[0.5, 0.5, -1 / R2], [-0.5, -0.5, -1 / R2], [-1 / R2, 1 / R2, 0.0]]
_S0_33 = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]

_S1_433 = [[0, -1, 0], [1, 0, 0], [0, 0, -1]]
_S0_433 = [[0.5, 0.5, 1 / R2], [0.5, 0.5, -1 / R2], [1 / R2, -1 / R2, 0.0]]

_S1_43 = [[0, 1, 0], [-1, 0, 0], [0, 0, 1]]
_S2_43 = [[0, 1, 0], [0, 0, -1], [-1, 0, 0]]
_S0_43 = [[0, 0, -1], [0, -1, 0], [-1, 0, 0]]

_S1_634 = [[0, 0, -1], [-1, 0, 0], [0, -1, 0]]
_S0_634 = [[1, 0, 0], [0, -1, 0], [0, 0, 1]]

_S2_643 = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
_S0_643 = [[0, 0, -1], [0, 1, 0], [-1, 0, 0]]

# Icosahedral generators, with AL = (1+sqrt5)/4 and BE = (sqrt5-1)/4.
_S1_35 = [[AL, 0.5, BE], [0.5, -BE, -AL], [-BE, AL, -0.5]]
_S2_35 = [[AL, -0.5, BE], [0.5, BE, -AL], [BE, AL, 0.5]]

_S1_1053 = [[AL, 0.5, BE], [-0.5, BE, AL], [-BE, AL, -0.5]]
_S2_1035 = [[AL, 0.5, -BE], [0.5, -BE, AL], [BE, -AL, -0.5]]

_S1_552 = [[0.5, BE, AL], [BE, AL, -0.5], [-AL, 0.5, BE]]
_S2_552 = [[0.5, -BE, AL], [BE, -AL, -0.5], [AL, 0.5, -BE]]

_S1_652 = [[0.5, BE, AL], [-BE, -AL, 0.5], [-AL, 0.5, BE]]
_S2_65 = [[0.5, BE, -AL], [BE, AL, 0.5], [AL, -0.5, BE]]

_S1_352 = [[-BE, AL, 0.5], [-AL, -0.5, BE], [0.5, -BE, AL]]
_S2_352 = [[-BE, AL, -0.5], [AL, 0.5, BE], [0.5, -BE, -AL]]

_S1_1033 = [[-BE, AL, 0.5], [-AL, -0.5, BE], [-0.5, BE, -AL]]
_S2_1033 = [[-BE, -AL, 0.5], [AL, -0.5, -BE], [0.5, BE, AL]]

def _diag(a, b, c):
    return [[a, 0, 0], [0, b, 0], [0, 0, c]]

# Spanning vector sets for the fundamental cones.
_V1 = [(1, 0, -1 / R2), (0.5, 0.5, 0), (0.5, -0.5, 0), (1 / 3, 0, 1 / (3 * R2))]
_V2 = [(1, 0, -1 / R2), (0.5, 0.5, 0), (1 / 3, 0, 1 / (3 * R2))]
_V3 = [(0, 0, -1), (1, 0, -1), (1, 1, -1), (0, 1, -1)]
_V4 = [(1, 1, -1), (1, 0, -1), (0, 0, -1)]
_V5 = [
    ((1 + R5) / 2, 0, 1),
    ((1 + R5) / 2, 0, 0),
    ((2 + R5) / 3, (1 + R5) / 6, 0),
    ((3 + R5) / 4, (1 + R5) / 4, 0.5),
]
_V6 = [((1 + R5) / 2, 0, 1), ((1 + R5) / 2, 0, 0), ((2 + R5) / 3, (1 + R5) / 6, 0)]

_W_TET = (4 / 9, 0, -2 / (9 * R2))
_W_433 = (11 / 24, 1 / 8, -R2 / 12)
_W_CUBE = (1 / 3, 1 / 3, -2 / 3)
_W_643 = (0.5, 0.25, -0.75)
_W_ICO = ((7 + 5 * R5) / 18, (1 + R5) / 18, 1 / 3)
_W_V6 = ((5 + 4 * R5) / 12, (1 + R5) / 24, 0.25)

# name -> (p, q, petrie, index2, petrie_dual, s1, s2, s0, spans, seed)
_BASE_ROWS = {
    "{3,3}": ("3", "3", None, True, False, _S1_33, _S2_33, _S0_33, _V1, _W_TET),
    "{4,3}_3": ("4", "3", 3, False, True, _S1_433, _S2_33, _S0_433, _V2, _W_433),
    "{4,3}": ("4", "3", None, True, False, _S1_43, _S2_43, _S0_43, _V3, _W_CUBE),
    "{6,3}_4": ("6", "3", 4, True, True, _S1_634, _S2_43, _S0_634, _V3, _W_CUBE),
    "{6,4}_3": ("6", "4", 3, False, True, _S1_634, _S2_643, _S0_643, _V4, _W_643),
    "{3,5}": ("3", "5", None, True, False, _S1_35, _S2_35, _diag(1, -1, -1), _V5, _W_ICO),
    "{10,5}_3": ("10", "5", 3, False, True, _S1_1053, _S2_35, _diag(1, 1, -1), _V6, _W_V6),
    "{10,3}_5": ("10", "3", 5, False, True, _S1_1053, _S2_1035, _diag(1, -1, 1), _V6, _W_V6),
    "{5,5/2}": ("5", "5/2", None, True, False, _S1_552, _S2_552, _diag(1, -1, -1), _V5, _W_ICO),
    "{6,5/2}": ("6", "5/2", None, False, True, _S1_652, _S2_552, _diag(1, 1, -1), _V6, _W_V6),
    "{6,5}": ("6", "5", None, False, True, _S1_652, _S2_65, _diag(1, -1, 1), _V6, _W_V6),
    "{3,5/2}": ("3", "5/2", None, True, False, _S1_352, _S2_352, _diag(1, -1, -1), _V5, _W_ICO),
    "{10/3,5/2}": ("10/3", "5/2", None, False, True, _S1_1033, _S2_352, _diag(1, -1, 1), _V6, _W_V6),
    "{10/3,3}": ("10/3", "3", None, False, True, _S1_1033, _S2_1033, _diag(1, 1, -1), _V6, _W_V6),
}

# Derived geometric duals: name -> (partner, p, q).  They reuse the
# partner's group, cone, and seed; duals share symmetry groups.
_DUAL_ROWS = {
    "{3,4}": ("{4,3}", "3", "4"),
    "{5,3}": ("{3,5}", "5", "3"),
    "{5/2,5}": ("{5,5/2}", "5/2", "5"),
    "{5/2,3}": ("{3,5/2}", "5/2", "3"),
}

BASE_NAMES = tuple(_BASE_ROWS)
DUAL_NAMES = tuple(_DUAL_ROWS)
CATALOG_NAMES = BASE_NAMES + DUAL_NAMES

PETRIE_DUAL_NAMES = tuple(n for n, row in _BASE_ROWS.items() if row[4])
CLASSICAL_NAMES = tuple(n for n, row in _BASE_ROWS.items() if not row[4])


def _slug(name: str) -> str:
    return (
        name.replace("{", "").replace("}", "").replace(",", "-").replace("/", "-")
    )


_ALIASES = {}
for _n in CATALOG_NAMES:
    _ALIASES[_n] = _n
    _ALIASES[_slug(_n)] = _n


def canonical_name(name: str) -> str:
    """Resolve a braces-form name or its shell-safe slug."""
    key = name.strip()
    if key in _ALIASES:
        return _ALIASES[key]
    raise UnknownPolyhedron(f"unknown polyhedron {name!r}")


def dual_generators(t: GeneratorTriple) -> GeneratorTriple:
    """Generator triple of the geometric dual: (s2^-1, s1^-1, s0)."""
    s1d = inverse(t.s2)
    s2d = inverse(t.s1)
    s0d = compose(s1d, s2d)
    if not iso_equal(s0d, t.s0, 1e-12):
        raise ValueError("dual triple does not preserve s0")
    return GeneratorTriple(s1d, s2d, s0d)


def _cyclic_order(spanning: list[np.ndarray]) -> list[np.ndarray]:
    """Sort spanning rays by angle around the cone's mean direction."""
    units = [v / np.linalg.norm(v) for v in spanning]
    axis = np.sum(units, axis=0)
    axis /= np.linalg.norm(axis)
    ref = np.cross(axis, np.array([1.0, 0.0, 0.0]))
    if np.linalg.norm(ref) < 1e-8:
        ref = np.cross(axis, np.array([0.0, 1.0, 0.0]))
    ref /= np.linalg.norm(ref)
    ref2 = np.cross(axis, ref)

    def angle(v):
        return math.atan2(float(v @ ref2), float(v @ ref))

    return sorted(spanning, key=angle)


def make_cone(spanning, seed) -> FundamentalCone:
    """Build a cone from spanning rays; facet normals point toward the seed.

    The rays are put in cyclic order around the cone axis so that facets are
    exactly the consecutive pairs; the seed must end up strictly inside and
    every ray weakly inside, otherwise the data is rejected.
    """
    spans = [np.asarray(v, float) for v in spanning]
    if len(spans) < 3:
        raise ValueError("a solid cone needs at least three spanning rays")
    seed = np.asarray(seed, float)
    ordered = _cyclic_order(spans)
    normals = []
    for i, a in enumerate(ordered):
        b = ordered[(i + 1) % len(ordered)]
        n = np.cross(a, b)
        norm = np.linalg.norm(n)
        if norm < 1e-12:
            raise ValueError("degenerate facet: collinear spanning rays")
        n /= norm
        if float(n @ seed) < 0:
            n = -n
        if float(n @ seed) <= CONE_TOL:
            raise ValueError("seed lies on a facet plane")
        normals.append(n)
    cone = FundamentalCone(tuple(ordered), tuple(normals), seed)
    for v in spans:
        for n in normals:
            if float(n @ v) < -1e-9:
                raise ValueError("spanning ray outside its own cone")
    if not cone_contains(cone, seed, strict=True):
        raise ValueError("seed is not interior to the cone")
    return cone


def cone_contains(cone: FundamentalCone, p, strict: bool = False) -> bool:
    """Membership test against all facet inequalities."""
    p = np.asarray(p, float)
    for n in cone.facet_normals:
        d = float(n @ p)
        if strict:
            if d <= CONE_TOL:
                return False
        elif d < -CONE_TOL:
            return False
    return True


def _check_entry(name, spec, triple, stored_s0):
    recomputed = compose(triple.s1, triple.s2)
    if not iso_equal(recomputed, stored_s0, 1e-12):
        raise ValueError(f"{name}: s1*s2 disagrees with the stored s0 column")
    expect = {
        "s1": (triple.s1, spec.p_order),
        "s2": (triple.s2, spec.q_order),
        "s0": (triple.s0, 2),
    }
    for label, (gen, order) in expect.items():
        got = iso_order(gen, cap=2 * order + 1)
        if got != order:
            raise ValueError(f"{name}: {label} has order {got}, expected {order}")


@lru_cache(maxsize=None)
def lookup(name: str):
    """Return (PolyhedronSpec, GeneratorTriple, FundamentalCone) for a name.

    Generator invariants (orders, s0 agreement) are verified on first load.
    """
    cname = canonical_name(name)
    if cname in _BASE_ROWS:
        p, q, petrie, index2, is_pd, s1, s2, s0, spans, w = _BASE_ROWS[cname]
        spec = PolyhedronSpec(
            name=cname,
            p=Fraction(p),
            q=Fraction(q),
            petrie_length=petrie,
            index2=index2,
            dual_of=None,
            is_petrie_dual=is_pd,
        )
        stored_s0 = _mat(s0)
        triple = GeneratorTriple(_mat(s1), _mat(s2), compose(_mat(s1), _mat(s2)))
        _check_entry(cname, spec, triple, stored_s0)
        cone = make_cone(spans, vector3(*w))
        return spec, triple, cone

    partner, p, q = _DUAL_ROWS[cname]
    pspec, ptriple, pcone = lookup(partner)
    spec = PolyhedronSpec(
        name=cname,
        p=Fraction(p),
        q=Fraction(q),
        petrie_length=None,
        index2=pspec.index2,
        dual_of=partner,
        is_petrie_dual=False,
    )
    triple = dual_generators(ptriple)
    _check_entry(cname, spec, triple, triple.s0)
    return spec, triple, pcone


def _interior_samples(cone: FundamentalCone, per_axis: int = 4) -> np.ndarray:
    """Deterministic points strictly inside the cone, at two radii each."""
    units = [v / np.linalg.norm(v) for v in cone.spanning]
    weights = range(1, per_axis + 1)
    dirs = []
    for combo in itertools.product(weights, repeat=len(units)):
        d = sum(w * u for w, u in zip(combo, units))
        dirs.append(d / np.linalg.norm(d))
    dirs = np.array(dirs)
    return np.concatenate([0.7 * dirs, 1.3 * dirs])


def verify_dirichlet(name: str, group, *, cone=None, seed=None) -> bool:
    """Check that the stored cone sits inside the Dirichlet cell of the seed.

    Requires the seed to have trivial stabilizer, and every sampled interior
    point to be strictly closer to the seed than to any other point of the
    seed's orbit.  The sample is deterministic and has at least 100 points.
    """
    if cone is None or seed is None:
        _, _, stored = lookup(name)
        cone = cone if cone is not None else stored
        seed = seed if seed is not None else stored.seed
    seed = np.asarray(seed, float)
    orbit = group.orbit(seed)
    nontrivial = [i for i in range(len(orbit)) if i != 0]
    for i in nontrivial:
        if np.max(np.abs(orbit[i] - seed)) <= 1e-9:
            return False
    samples = _interior_samples(cone)
    for x in samples:
        d_seed = float(np.dot(x - seed, x - seed))
        for i in nontrivial:
            if float(np.dot(x - orbit[i], x - orbit[i])) <= d_seed:
                return False
    return True
