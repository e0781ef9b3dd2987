"""Euclidean 3-space primitives: points, isometries, and tolerant equality.

All catalog coordinates involve square roots of 2 and 5, so arithmetic is
plain floating point; orbit sizes stay at or below 120, which keeps error
accumulation orders of magnitude below the tolerances used here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

POINT_TOL = float(os.environ.get("SKELSNUB_TOL", "1e-9"))
MATRIX_TOL = 1e-12
KEY_GRID = 1e-6

_IDENTITY3 = np.eye(3)


def vector3(x, y, z) -> np.ndarray:
    """Build a finite 3-vector."""
    v = np.array([x, y, z], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite coordinates {v!r}")
    return v


def points_equal(a, b, tol: float | None = None) -> bool:
    """Componentwise equality within tolerance (default POINT_TOL)."""
    t = POINT_TOL if tol is None else tol
    return bool(np.max(np.abs(np.asarray(a, float) - np.asarray(b, float))) <= t)


@dataclass(frozen=True, eq=False)
class Isometry:
    """An affine isometry p -> linear @ p + translation.

    The linear part must be orthogonal with determinant +1 or -1; both are
    verified at construction within 1e-9.
    """

    linear: np.ndarray
    translation: np.ndarray = None  # type: ignore[assignment]

    def __post_init__(self):
        lin = np.array(self.linear, dtype=float)
        tr = (
            np.zeros(3)
            if self.translation is None
            else np.array(self.translation, dtype=float)
        )
        if lin.shape != (3, 3) or tr.shape != (3,):
            raise ValueError("isometry needs a 3x3 linear part and a 3-vector")
        if not (np.all(np.isfinite(lin)) and np.all(np.isfinite(tr))):
            raise ValueError("non-finite isometry entries")
        if np.max(np.abs(lin.T @ lin - _IDENTITY3)) > 1e-9:
            raise ValueError("linear part is not orthogonal")
        if abs(abs(float(np.linalg.det(lin))) - 1.0) > 1e-9:
            raise ValueError("linear part determinant is not +-1")
        lin.setflags(write=False)
        tr.setflags(write=False)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tr)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.linear))

    def flat(self) -> np.ndarray:
        """All 12 affine entries as one vector, for keyed deduplication."""
        return np.concatenate([self.linear.ravel(), self.translation])


def identity_isometry() -> Isometry:
    return Isometry(np.eye(3), np.zeros(3))


def apply(iso: Isometry, p) -> np.ndarray:
    """Image of point p under the isometry."""
    return iso.linear @ np.asarray(p, float) + iso.translation


def compose(a: Isometry, b: Isometry) -> Isometry:
    """Isometry acting as a after b: compose(a, b)(p) = a(b(p))."""
    return Isometry(a.linear @ b.linear, a.linear @ b.translation + a.translation)


def inverse(iso: Isometry) -> Isometry:
    lin = iso.linear.T
    return Isometry(lin, -(lin @ iso.translation))


def iso_equal(a: Isometry, b: Isometry, tol: float = POINT_TOL) -> bool:
    return bool(np.max(np.abs(a.flat() - b.flat())) <= tol)


def is_identity(iso: Isometry, tol: float = POINT_TOL) -> bool:
    return (
        np.max(np.abs(iso.linear - _IDENTITY3)) <= tol
        and np.max(np.abs(iso.translation)) <= tol
    )


def iso_order(g: Isometry, cap: int = 1000) -> int | None:
    """Smallest k <= cap with g**k the identity, or None if there is none."""
    if cap < 1:
        raise ValueError("cap must be positive")
    power = g
    for k in range(1, cap + 1):
        if is_identity(power):
            return k
        power = compose(g, power)
    return None


@dataclass(frozen=True, eq=False)
class FixedSetKind:
    """Classified affine solution set of g(p) = p.

    tag is one of "all", "plane", "line", "point", "empty".  For plane and
    line the anchor plus spanning directions describe the set; for a plane,
    is_reflection records whether the linear determinant is -1, as expected
    of a genuine plane reflection.
    """

    tag: str
    anchor: np.ndarray | None = None
    spanning: tuple = ()
    is_reflection: bool | None = None

    @property
    def dimension(self) -> int | None:
        return {"all": 3, "plane": 2, "line": 1, "point": 0, "empty": None}[self.tag]


def classify_fixed_set(g: Isometry, tol: float = 1e-9) -> FixedSetKind:
    """Solve (linear - I) p = -translation and classify by dimension."""
    m = g.linear - _IDENTITY3
    _, svals, vt = np.linalg.svd(m)
    rank = int(np.sum(svals > tol))
    null_basis = tuple(vt[rank:])
    anchor, *_ = np.linalg.lstsq(m, -g.translation, rcond=None)
    if np.max(np.abs(m @ anchor + g.translation)) > tol:
        return FixedSetKind("empty")
    dim = 3 - rank
    if dim == 3:
        return FixedSetKind("all", anchor=np.zeros(3))
    if dim == 2:
        return FixedSetKind(
            "plane", anchor=anchor, spanning=null_basis, is_reflection=g.det < 0
        )
    if dim == 1:
        return FixedSetKind("line", anchor=anchor, spanning=null_basis)
    return FixedSetKind("point", anchor=anchor)


def project_to_fixed_set(g: Isometry, p, tol: float = 1e-9) -> np.ndarray:
    """Orthogonal projection of p onto the fixed set of g.

    Raises ValueError when the fixed set is empty.
    """
    kind = classify_fixed_set(g, tol)
    if kind.tag == "empty":
        raise ValueError("isometry has no fixed points")
    if kind.tag == "all":
        return np.asarray(p, float)
    basis = np.array(kind.spanning) if kind.spanning else np.zeros((0, 3))
    rel = np.asarray(p, float) - kind.anchor
    return kind.anchor + basis.T @ (basis @ rel)


def canonical_key(p, grid: float = KEY_GRID) -> tuple:
    """Deterministic quantization of coordinates on a fixed grid.

    Points within POINT_TOL share a key except on quantization boundaries;
    consumers that deduplicate must confirm with an exact tolerance
    comparison (see DedupIndex).
    """
    q = np.rint(np.asarray(p, float) / grid).astype(np.int64)
    return tuple(int(c) for c in q)


class DedupIndex:
    """Registry assigning stable indices to float vectors up to tolerance.

    Quantized keys bucket candidates and an exact tolerance comparison
    decides membership.  A key miss falls back to a linear scan so that
    grid-boundary splits cannot create duplicates; the missing key is then
    aliased to the found index, keeping repeats O(1).
    """

    def __init__(self, tol: float | None = None, grid: float = KEY_GRID):
        self.tol = POINT_TOL if tol is None else tol
        self.grid = grid
        self.items: list[np.ndarray] = []
        self._buckets: dict[tuple, list[int]] = {}

    def __len__(self) -> int:
        return len(self.items)

    def _key(self, vec: np.ndarray) -> tuple:
        return canonical_key(vec, self.grid)

    def find(self, vec) -> int | None:
        vec = np.asarray(vec, float)
        key = self._key(vec)
        for idx in self._buckets.get(key, ()):
            if np.max(np.abs(self.items[idx] - vec)) <= self.tol:
                return idx
        for idx, item in enumerate(self.items):
            if np.max(np.abs(item - vec)) <= self.tol:
                self._buckets.setdefault(key, []).append(idx)
                return idx
        return None

    def add(self, vec) -> int:
        vec = np.asarray(vec, float)
        idx = self.find(vec)
        if idx is not None:
            return idx
        idx = len(self.items)
        self.items.append(vec.copy())
        self._buckets.setdefault(self._key(vec), []).append(idx)
        return idx
