import math

import numpy as np
import pytest

from conftest import grp, load
from skelsnub import catalog, group
from skelsnub.errors import UnknownPolyhedron
from skelsnub.geometry import apply, canonical_key, classify_fixed_set, iso_equal, iso_order

R2 = math.sqrt(2.0)
R5 = math.sqrt(5.0)


def test_lookup_cube_generators():
    _, gens, _ = load("{4,3}")
    assert np.allclose(gens.s1.linear, [[0, 1, 0], [-1, 0, 0], [0, 0, 1]])
    assert np.allclose(gens.s2.linear, [[0, 1, 0], [0, 0, -1], [-1, 0, 0]])
    assert np.allclose(gens.s0.linear, [[0, 0, -1], [0, -1, 0], [-1, 0, 0]])


def test_tetrahedron_cone_spanning_set():
    _, _, cone = load("{3,3}")
    expected = {
        canonical_key(v)
        for v in [
            (1, 0, -1 / R2),
            (0.5, 0.5, 0),
            (0.5, -0.5, 0),
            (1 / 3, 0, 1 / (3 * R2)),
        ]
    }
    assert {canonical_key(v) for v in cone.spanning} == expected


def test_icosahedron_seed():
    _, _, cone = load("{3,5}")
    assert np.allclose(cone.seed, [(7 + 5 * R5) / 18, (1 + R5) / 18, 1 / 3])


def test_dual_generators_involution_and_orders():
    _, gens, _ = load("{4,3}")
    dual = catalog.dual_generators(gens)
    back = catalog.dual_generators(dual)
    assert iso_equal(back.s1, gens.s1) and iso_equal(back.s2, gens.s2)
    assert iso_order(dual.s1, cap=8) == 3
    assert iso_order(dual.s2, cap=8) == 4
    assert iso_equal(dual.s0, gens.s0)


def test_cone_contains():
    _, _, cone = load("{3,3}")
    assert catalog.cone_contains(cone, cone.seed, strict=True)
    assert not catalog.cone_contains(cone, np.zeros(3), strict=True)
    assert catalog.cone_contains(cone, np.zeros(3), strict=False)
    assert not catalog.cone_contains(cone, -cone.seed, strict=False)


def test_verify_dirichlet_all_entries():
    for name in catalog.CATALOG_NAMES:
        assert catalog.verify_dirichlet(name, grp(name)), name


def test_verify_dirichlet_corrupted_seed():
    _, gens, cone = load("{4,3}")
    bad_seed = apply(gens.s1, cone.seed)
    assert not catalog.verify_dirichlet("{4,3}", grp("{4,3}"), seed=bad_seed)


def test_verify_dirichlet_trivial_group():
    from skelsnub.geometry import identity_isometry
    from skelsnub.group import group_from_elements

    trivial = group_from_elements([identity_isometry()])
    assert catalog.verify_dirichlet("{4,3}", trivial)


def test_generator_orders_match_schlafli():
    for name in catalog.CATALOG_NAMES:
        spec, gens, _ = load(name)
        assert iso_order(gens.s1, cap=30) == spec.p_order, name
        assert iso_order(gens.s2, cap=30) == spec.q_order, name
        assert iso_order(gens.s0, cap=30) == 2, name


def test_s0_plane_exactly_for_petrie_duals():
    for name in catalog.CATALOG_NAMES:
        spec, gens, _ = load(name)
        kind = classify_fixed_set(gens.s0)
        if spec.is_petrie_dual:
            assert kind.tag == "plane", name
        else:
            assert kind.tag != "plane", name


def test_seed_satisfies_ipc():
    for name in catalog.CATALOG_NAMES:
        _, _, cone = load(name)
        assert group.satisfies_ipc(grp(name), cone.seed), name


def test_unknown_polyhedron():
    with pytest.raises(UnknownPolyhedron):
        catalog.lookup("{7,3}")


def test_slug_aliases():
    assert catalog.canonical_name("4-3_3") == "{4,3}_3"
    assert catalog.canonical_name("10-3-3") == "{10/3,3}"
    assert catalog.canonical_name("5-2-5") == "{5/2,5}"
    assert catalog.canonical_name("{10,3}_5") == "{10,3}_5"


def test_catalog_shape():
    assert len(catalog.CATALOG_NAMES) == 18
    assert len(catalog.BASE_NAMES) == 14
    assert len(catalog.PETRIE_DUAL_NAMES) == 9
    assert len(catalog.CLASSICAL_NAMES) == 5
    for name in catalog.DUAL_NAMES:
        spec, _, _ = load(name)
        assert spec.dual_of in catalog.BASE_NAMES


def test_petrie_lengths_stored():
    stored = {
        name: load(name)[0].petrie_length for name in catalog.CATALOG_NAMES
    }
    assert stored["{4,3}_3"] == 3
    assert stored["{6,3}_4"] == 4
    assert stored["{6,4}_3"] == 3
    assert stored["{10,5}_3"] == 3
    assert stored["{10,3}_5"] == 5
    assert stored["{4,3}"] is None
