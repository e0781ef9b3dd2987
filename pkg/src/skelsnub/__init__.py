"""Skeletal snub polyhedra from the finite regular polyhedra in 3-space.

Build snubs as orbit structures under the combinatorial rotation subgroup,
validate the skeletal polyhedron axioms, analyze combinatorics (vertex
symbols, f-vectors, Euler characteristic, orientability, isomorphism),
solve the uniformity equations, and reconstruct parents from snubs.
"""

from .analysis import (
    FVector,
    PolygonClass,
    UniformRoot,
    VertexSymbol,
    classify_polygon,
    euler,
    fvector,
    isomorphic,
    orientable,
    solve_uniformity,
    trace_petrie,
    uniformity_residual,
    validate,
    vertex_figure_shape,
    vertex_symbol,
)
from .catalog import (
    CATALOG_NAMES,
    FundamentalCone,
    GeneratorTriple,
    PolyhedronSpec,
    cone_contains,
    dual_generators,
    lookup,
    verify_dirichlet,
)
from .converse import (
    RotationPair,
    SnubTypeWitness,
    detect_symmetries,
    find_rotations,
    make_witness,
    mark_special_triangles,
    reconstruct_parent,
)
from .geometry import (
    FixedSetKind,
    Isometry,
    apply,
    canonical_key,
    classify_fixed_set,
    compose,
    inverse,
    iso_order,
    vector3,
)
from .group import (
    FiniteGroup,
    TypeSet,
    close,
    satisfies_ipc,
    stabilizer,
    type_set,
)
from .records import SnubRecord, dumps_record, export_obj, loads_record
from .snub import (
    BaseComplex,
    SkeletalPolyhedron,
    base_complex,
    build_snub,
    degenerate_identity_check,
)

__version__ = "0.1.0"

__all__ = [
    "FVector",
    "PolygonClass",
    "UniformRoot",
    "VertexSymbol",
    "classify_polygon",
    "euler",
    "fvector",
    "isomorphic",
    "orientable",
    "solve_uniformity",
    "trace_petrie",
    "uniformity_residual",
    "validate",
    "vertex_figure_shape",
    "vertex_symbol",
    "CATALOG_NAMES",
    "FundamentalCone",
    "GeneratorTriple",
    "PolyhedronSpec",
    "cone_contains",
    "dual_generators",
    "lookup",
    "verify_dirichlet",
    "RotationPair",
    "SnubTypeWitness",
    "detect_symmetries",
    "find_rotations",
    "make_witness",
    "mark_special_triangles",
    "reconstruct_parent",
    "FixedSetKind",
    "Isometry",
    "apply",
    "canonical_key",
    "classify_fixed_set",
    "compose",
    "inverse",
    "iso_order",
    "vector3",
    "FiniteGroup",
    "TypeSet",
    "close",
    "satisfies_ipc",
    "stabilizer",
    "type_set",
    "SnubRecord",
    "dumps_record",
    "export_obj",
    "loads_record",
    "BaseComplex",
    "SkeletalPolyhedron",
    "base_complex",
    "build_snub",
    "degenerate_identity_check",
]
