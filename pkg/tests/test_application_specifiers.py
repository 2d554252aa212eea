import pytest
from pytest import raises

from application.specifiers import parse_automorphism
from domain.errors import BadParameters
from domain.groups.automorphisms import automorphism_group
from domain.groups.catalog import cyclic, dihedral


@pytest.fixture
def z6():
    return cyclic(6)


@pytest.mark.parametrize("spec", [None, "", "id", "identity", " identity "])
def test_identity_forms(z6, spec):
    assert parse_automorphism(spec, z6).is_identity()


def test_inversion_and_power(z6):
    inverse = (0, 5, 4, 3, 2, 1)
    assert parse_automorphism("inversion", z6).image == inverse
    assert parse_automorphism("power:5", z6).image == inverse
    assert parse_automorphism("power:1", z6).is_identity()


def test_inner_automorphism():
    d8 = dihedral(8)
    gamma = parse_automorphism("inner:1", d8)
    # conjugation by the rotation fixes rotations and moves reflections
    assert all(gamma(x) == x for x in range(4))
    assert gamma(4) != 4


def test_image_and_generator_forms():
    z3 = cyclic(3)
    assert parse_automorphism("images:0,2,1", z3).image == (0, 2, 1)
    assert parse_automorphism("gens:1->2", z3).image == (0, 2, 1)


def test_index_forms(z6):
    automorphisms = automorphism_group(z6)
    assert parse_automorphism("index:1", z6) == automorphisms[1]
    assert parse_automorphism("1", z6) == automorphisms[1]
    assert parse_automorphism("0", z6) == automorphisms[0]


@pytest.mark.parametrize("spec", [
    "power:2",
    "inner:99",
    "index:7",
    "images:0,1,1,3,4,5",
    "gens:1",
    "gens:2->4",
    "power:x",
    "frobnicate",
])
def test_bad_specifiers(z6, spec):
    with raises(BadParameters):
        parse_automorphism(spec, z6)


def test_inversion_needs_an_abelian_group():
    with raises(BadParameters):
        parse_automorphism("inversion", dihedral(8))
