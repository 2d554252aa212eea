import pytest
from pytest import raises

from domain.cohomology.cochains import OneCochain
from domain.errors import DoesNotNormalize, TripleConditionsFail
from domain.groups.automorphisms import automorphism_group
from domain.groups.catalog import alternating, dihedral, symmetric
from domain.groups.finite_group import GroupAutomorphism
from domain.groups.structure import center, derived_subgroup, sylow_subgroup
from domain.wells.aut_subgroups import aut_subgroups
from domain.wells.compatible import is_compatible
from domain.wells.extension import extension_from
from domain.wells.triples import WellsTriple, automorphism_from_triple, triple_failure, triple_of, valid_triples


def d8_center():
    d8 = dihedral(8)
    return extension_from(d8, center(d8))


def s3_alternating():
    s3 = symmetric(3)
    return extension_from(s3, sylow_subgroup(s3, 3))


def a4_klein():
    a4 = alternating(4)
    return extension_from(a4, derived_subgroup(a4))


def d8_klein():
    d8 = dihedral(8)
    z = [m for m in center(d8).members if m != 0][0]
    s = [x for x in range(8) if d8.element_orders[x] == 2 and x != z][0]
    return extension_from(d8, d8.generated_subgroup([s, z]))


@pytest.mark.parametrize("build, order", [(d8_center, 8), (s3_alternating, 6), (a4_klein, 24)])
def test_triples_recover_every_normalizing_automorphism(build, order):
    ext = build()
    expected = {a.image for a in aut_subgroups(ext).aut_N_of_G}
    triples = valid_triples(ext)
    images = [automorphism_from_triple(ext, t).image for t in triples]
    assert len(images) == order
    assert set(images) == expected


@pytest.mark.parametrize("build", [d8_center, s3_alternating, a4_klein, d8_klein])
def test_triple_round_trip(build):
    ext = build()
    for gamma in aut_subgroups(ext).aut_N_of_G:
        triple = triple_of(ext, gamma)
        assert triple_failure(ext, triple) is None
        assert automorphism_from_triple(ext, triple) == gamma


def test_non_homomorphic_chi_breaks_the_cocycle_condition():
    ext = d8_center()
    identity = WellsTriple(
        GroupAutomorphism.identity(ext.N_group),
        GroupAutomorphism.identity(ext.H),
        OneCochain.from_unknowns(ext.H, (2,), [1, 0, 0]),
    )
    assert triple_failure(ext, identity)[0] == 2
    with raises(TripleConditionsFail) as info:
        automorphism_from_triple(ext, identity)
    assert info.value.condition == 2


def test_incompatible_theta_breaks_the_action_condition():
    ext = a4_klein()
    phi = GroupAutomorphism.identity(ext.H)
    theta = next(a for a in automorphism_group(ext.N_group) if not is_compatible(ext, a, phi))
    triple = WellsTriple(theta, phi, OneCochain.zero(ext.H, ext.coeffs.invariant_factors))
    with raises(TripleConditionsFail) as info:
        automorphism_from_triple(ext, triple)
    assert info.value.condition == 3


def test_automorphism_moving_n_has_no_triple():
    ext = d8_klein()
    gamma = next(a for a in automorphism_group(ext.G) if not a.preserves(ext.N))
    with raises(DoesNotNormalize):
        triple_of(ext, gamma)


def test_triple_json():
    ext = s3_alternating()
    data = valid_triples(ext)[0].to_json()
    assert data["theta"] == [0, 1, 2]
    assert data["phi"] == [0, 1]
