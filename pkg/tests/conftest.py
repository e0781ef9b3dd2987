"""Shared fixtures: cached catalog loads, groups, and seed snubs."""

from functools import lru_cache

import numpy as np
import pytest

from skelsnub import catalog, group, snub
from skelsnub.geometry import project_to_fixed_set

EXPECTED_ORDERS = {
    "{3,3}": 12,
    "{4,3}_3": 24,
    "{4,3}": 24,
    "{6,3}_4": 24,
    "{6,4}_3": 48,
    "{3,5}": 60,
    "{10,5}_3": 120,
    "{10,3}_5": 120,
    "{5,5/2}": 60,
    "{6,5/2}": 120,
    "{6,5}": 120,
    "{3,5/2}": 60,
    "{10/3,5/2}": 120,
    "{10/3,3}": 120,
    "{3,4}": 24,
    "{5,3}": 60,
    "{5/2,5}": 60,
    "{5/2,3}": 60,
}


@lru_cache(maxsize=None)
def load(name):
    return catalog.lookup(name)


@lru_cache(maxsize=None)
def grp(name):
    _, gens, _ = load(name)
    return group.close(gens)


@lru_cache(maxsize=None)
def seed_snub(name):
    spec, gens, cone = load(name)
    return snub.build_snub(grp(name), gens, cone.seed, name=name)


@lru_cache(maxsize=None)
def parent_like(name):
    """S2 degenerate snub: the parent rebuilt from an s2-axis point."""
    spec, gens, cone = load(name)
    v = project_to_fixed_set(gens.s2, np.array([0.93, 0.21, 0.13]))
    if np.linalg.norm(v) < 1e-9:
        raise ValueError(f"{name}: s2 has no axis to project onto")
    return snub.build_snub(grp(name), gens, v, name=name)


def random_ipc_points(name, count, rng):
    """Deterministic interior cone points satisfying the placement condition."""
    _, gens, cone = load(name)
    g = grp(name)
    units = [s / np.linalg.norm(s) for s in cone.spanning]
    out = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 100 * count:
            raise RuntimeError("could not sample IPC points")
        weights = rng.random(len(units)) + 0.05
        v = sum(w * u for w, u in zip(weights, units))
        v = v / np.linalg.norm(v)
        if group.satisfies_ipc(g, v):
            out.append(v)
    return out


def hemicube_fixture():
    """Hand-built hemi-cube map: 4 vertices, 6 edges, 3 quadrilaterals."""
    vertices = np.array(
        [
            [1.0, 1.0, 1.0],
            [1.0, -1.0, -1.0],
            [-1.0, 1.0, -1.0],
            [-1.0, -1.0, 1.0],
        ]
    )
    cycles = [(0, 3, 1, 2), (0, 3, 2, 1), (0, 1, 3, 2)]
    edges = []
    seen = set()
    for cyc in cycles:
        for k in range(4):
            a, b = cyc[k], cyc[(k + 1) % 4]
            pair = (a, b) if a < b else (b, a)
            if pair not in seen:
                seen.add(pair)
                edges.append(snub.Edge(pair[0], pair[1], 1))
    faces = [snub.Face(c, 1) for c in cycles]
    return snub.SkeletalPolyhedron(
        vertices=vertices, edges=edges, faces=faces
    )


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260810)
