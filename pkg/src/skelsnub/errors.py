"""Exception types shared across the package."""


class SkelsnubError(Exception):
    """Base class for all skelsnub errors."""


class UnknownPolyhedron(SkelsnubError):
    """Requested catalog name does not resolve to an entry."""


class GroupTooLarge(SkelsnubError):
    """Group closure exceeded its element cap; generators are suspect."""


class CenterPoint(SkelsnubError):
    """Initial vertex is fixed by every generator (the group's center point)."""


class InconsistentTypeSet(SkelsnubError):
    """Point appears fixed by exactly two generators, which is impossible
    for exact data and signals a tolerance problem in the input."""


class DegenerateCollapse(SkelsnubError):
    """Orbit of the initial vertex is a single point; no polyhedron exists."""


class MultiCoverage(SkelsnubError):
    """An edge of the orbit complex lies in more than two faces."""

    def __init__(self, witnesses):
        self.witnesses = list(witnesses)
        super().__init__(f"{len(self.witnesses)} edge(s) lie in more than two faces")


class TypeCollision(SkelsnubError):
    """The same edge or face was produced by two different type orbits."""


class DegeneratePolygon(SkelsnubError):
    """Vertex list does not span a polygon (collinear or too short)."""


class NonCyclicVertexFigure(SkelsnubError):
    """Vertex figure is not a single cycle, so no vertex symbol exists."""


class NotQuadrilateral(SkelsnubError):
    """Vertex figure is not a usable 4-cycle."""


class NotVertexTransitive(SkelsnubError):
    """No detected isometry moves the base vertex onto some other vertex."""


class MarkingInconsistent(SkelsnubError):
    """Special-triangle case analysis failed; input is not of snub type."""


class NoSuchSymmetry(SkelsnubError):
    """Required rotation is missing from the symmetry group."""


class NonUnique(SkelsnubError):
    """Required rotation is not unique in the symmetry group."""


class StabilizerMismatch(SkelsnubError):
    """Orbit stabilizers are inconsistent with the generating rotations."""
