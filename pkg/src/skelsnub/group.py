"""Finite group machinery: closure from generators, stabilizers, type sets.

Closure runs a deterministic breadth-first search (s1 before s2) so that
element indices, and everything derived from them downstream, are
reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import GeneratorTriple
from .errors import CenterPoint, GroupTooLarge, InconsistentTypeSet
from .geometry import (
    POINT_TOL,
    DedupIndex,
    Isometry,
    apply,
    compose,
    identity_isometry,
    is_identity,
    points_equal,
)

ELEMENT_TOL = 1e-9


@dataclass(frozen=True)
class TypeSet:
    """Which base edges and faces an initial vertex generates."""

    members: frozenset

    def __contains__(self, i) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def sorted(self) -> tuple:
        return tuple(sorted(self.members))

    def __repr__(self) -> str:
        return "TypeSet({%s})" % ", ".join(str(i) for i in self)


@dataclass(eq=False)
class FiniteGroup:
    """A fully enumerated finite isometry group with multiplication table.

    elements[0] is the identity.  generator_indices carries the positions
    of (s1, s2, s0) when the group was closed from a generator triple.
    """

    elements: list[Isometry]
    cayley: np.ndarray
    inverse_index: np.ndarray
    generator_indices: tuple | None = None
    _index: DedupIndex = field(default=None, repr=False)  # type: ignore[assignment]
    _linear: np.ndarray = field(default=None, repr=False)  # type: ignore[assignment]
    _translation: np.ndarray = field(default=None, repr=False)  # type: ignore[assignment]

    def __post_init__(self):
        if self._linear is None:
            self._linear = np.stack([g.linear for g in self.elements])
            self._translation = np.stack([g.translation for g in self.elements])

    def __len__(self) -> int:
        return len(self.elements)

    def orbit(self, p) -> np.ndarray:
        """Images of p under every element, in element order (not deduplicated)."""
        p = np.asarray(p, float)
        return self._linear @ p + self._translation

    def element_index(self, iso: Isometry) -> int | None:
        if self._index is None:
            idx = DedupIndex(tol=ELEMENT_TOL)
            for g in self.elements:
                idx.add(g.flat())
            self._index = idx
        return self._index.find(iso.flat())

    def multiply(self, i: int, j: int) -> int:
        return int(self.cayley[i, j])

    def power_indices(self, i: int, count: int) -> list[int]:
        """Indices of element i raised to 0..count-1."""
        out = [0]
        for _ in range(count - 1):
            out.append(int(self.cayley[out[-1], i]))
        return out

    def cyclic_subgroup(self, i: int) -> list[int]:
        """Indices of the cyclic subgroup generated by element i."""
        out = [0]
        cur = i
        while cur != 0:
            out.append(cur)
            cur = int(self.cayley[cur, i])
        return sorted(out)


def _build_tables(elements: list[Isometry], index: DedupIndex):
    n = len(elements)
    linear = np.stack([g.linear for g in elements])
    translation = np.stack([g.translation for g in elements])
    cayley = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        prod_lin = elements[i].linear @ linear
        prod_tr = translation @ elements[i].linear.T + elements[i].translation
        for j in range(n):
            flat = np.concatenate([prod_lin[j].ravel(), prod_tr[j]])
            k = index.find(flat)
            if k is None:
                raise ValueError("element set is not closed under composition")
            cayley[i, j] = k
    inverse_index = np.empty(n, dtype=np.int32)
    for i in range(n):
        js = np.nonzero(cayley[i] == 0)[0]
        if len(js) != 1:
            raise ValueError("element has no unique inverse")
        inverse_index[i] = js[0]
    return cayley, inverse_index, linear, translation


def close(gens: GeneratorTriple, cap: int = 10000) -> FiniteGroup:
    """Enumerate the group generated by s1 and s2 by breadth-first closure.

    Deduplication compares all 12 affine entries at 1e-9.  Raises
    GroupTooLarge when the closure exceeds cap, which signals a non-finite
    or corrupted generator set.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    index = DedupIndex(tol=ELEMENT_TOL)
    elements = [identity_isometry()]
    index.add(elements[0].flat())
    cursor = 0
    while cursor < len(elements):
        g = elements[cursor]
        for s in (gens.s1, gens.s2):
            h = compose(g, s)
            if index.find(h.flat()) is None:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"closure exceeded cap={cap}")
                index.add(h.flat())
                elements.append(h)
        cursor += 1
    cayley, inverse_index, linear, translation = _build_tables(elements, index)
    gen_idx = tuple(
        index.find(s.flat()) for s in (gens.s1, gens.s2, gens.s0)
    )
    if any(i is None for i in gen_idx):
        raise ValueError("generators missing from their own closure")
    return FiniteGroup(
        elements=elements,
        cayley=cayley,
        inverse_index=inverse_index,
        generator_indices=gen_idx,
        _index=index,
        _linear=linear,
        _translation=translation,
    )


def group_from_elements(elements: list[Isometry]) -> FiniteGroup:
    """Wrap an explicit closed element list as a FiniteGroup.

    The identity is moved to position 0; duplicates are dropped.  Raises if
    the set is not closed under composition.
    """
    ident = [g for g in elements if is_identity(g, ELEMENT_TOL)]
    if not ident:
        raise ValueError("element list lacks the identity")
    ordered = [ident[0]] + [g for g in elements if not is_identity(g, ELEMENT_TOL)]
    index = DedupIndex(tol=ELEMENT_TOL)
    unique = []
    for g in ordered:
        if index.find(g.flat()) is None:
            index.add(g.flat())
            unique.append(g)
    cayley, inverse_index, linear, translation = _build_tables(unique, index)
    return FiniteGroup(
        elements=unique,
        cayley=cayley,
        inverse_index=inverse_index,
        generator_indices=None,
        _index=index,
        _linear=linear,
        _translation=translation,
    )


def stabilizer(group: FiniteGroup, p, tol: float | None = None) -> list[int]:
    """Indices of all elements fixing p; index 0 is always present."""
    t = POINT_TOL if tol is None else tol
    images = group.orbit(p)
    diffs = np.max(np.abs(images - np.asarray(p, float)), axis=1)
    return [int(i) for i in np.nonzero(diffs <= t)[0]]


def satisfies_ipc(group: FiniteGroup, v) -> bool:
    """True when the stabilizer of v is trivial (free action on the orbit)."""
    return stabilizer(group, v) == [0]


def type_set(gens: GeneratorTriple, v, tol: float | None = None) -> TypeSet:
    """Type set of an initial vertex.

    {1,2} when s0 fixes v, {2} for s1, {1} for s2, {0,1,2} when nothing
    fixes v.  A point fixed by all three generators is the center and is
    rejected with CenterPoint; a point fixed by exactly two would be
    inconsistent exact data and signals a tolerance bug.
    """
    fixed = [
        points_equal(apply(s, v), v, tol)
        for s in (gens.s0, gens.s1, gens.s2)
    ]
    count = sum(fixed)
    if count == 3:
        raise CenterPoint("initial vertex is fixed by the whole group")
    if count == 2:
        raise InconsistentTypeSet(
            "vertex fixed by exactly two generators; check tolerances"
        )
    if fixed[0]:
        return TypeSet(frozenset({1, 2}))
    if fixed[1]:
        return TypeSet(frozenset({2}))
    if fixed[2]:
        return TypeSet(frozenset({1}))
    return TypeSet(frozenset({0, 1, 2}))
