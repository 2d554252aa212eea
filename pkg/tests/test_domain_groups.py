import numpy as np
import pytest
from pytest import raises

from domain.errors import (
    BadParameters,
    ClosureBoundExceeded,
    NoIdentity,
    NotAbelian,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    UnknownName,
)
from domain.groups.automorphisms import automorphism_group, inner_automorphisms, is_commuting_automorphism
from domain.groups.catalog import GroupFactory, catalog, cyclic, dihedral, generalized_quaternion, heisenberg_mod_p
from domain.groups.finite_group import GroupAutomorphism, Subgroup, group_from_cayley
from domain.groups.permutations import group_from_permutations
from domain.groups.structure import (
    abelian_normal_subgroups,
    center,
    center_and_derived,
    derived_subgroup,
    is_nilpotent,
    nilpotency_class,
    p_part,
    quotient_group,
    require_normal,
    sylow_subgroup,
)

LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.fixture
def d8():
    return dihedral(8)


@pytest.fixture
def s3():
    return group_from_permutations(3, [[1, 2, 0], [1, 0, 2]], name="S3")


def test_trivial_and_order_two_tables():
    assert group_from_cayley([[0]]).order == 1
    z2 = group_from_cayley([[0, 1], [1, 0]])
    assert z2.order == 2
    assert z2.is_abelian()


def test_identity_is_relabelled_to_index_zero():
    group = group_from_cayley([[1, 0], [0, 1]], element_labels=["a", "e"])
    assert group.mul(0, 1) == 1
    assert group.mul(1, 1) == 0
    assert group.label(0) == "e"


def test_table_axiom_violations_are_named():
    with raises(NotLatinSquare):
        group_from_cayley([[0, 1], [0, 1]])
    with raises(NoIdentity):
        group_from_cayley([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    with raises(NotAssociative):
        group_from_cayley(LOOP_5)


def test_permutation_closure_orders():
    assert group_from_permutations(3, [[1, 2, 0]]).order == 3
    assert group_from_permutations(3, [[1, 2, 0], [1, 0, 2]]).order == 6
    assert group_from_permutations(4, [[1, 2, 3, 0], [0, 3, 2, 1]]).order == 8


def test_permutation_closure_bound():
    with raises(ClosureBoundExceeded):
        group_from_permutations(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], closure_bound=50)
    with raises(BadParameters):
        group_from_permutations(3, [[0, 0, 1]])


def test_catalog_families():
    z9 = catalog("cyclic", [9])
    assert z9.order == 9 and z9.is_abelian()

    h = heisenberg_mod_p(3)
    Z, D = center_and_derived(h)
    assert h.order == 27
    assert Z.order == 3 and Z == D
    assert nilpotency_class(h) == 2

    q8 = GroupFactory.create("extraspecial_minus", 1)
    assert q8.order == 8
    assert sorted(int(o) for o in q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_catalog_rejects_bad_input():
    with raises(UnknownName):
        GroupFactory.create("monster")
    with raises(BadParameters):
        dihedral(7)
    with raises(BadParameters):
        generalized_quaternion(12)


def test_dihedral_center_and_quotient(d8):
    Z = center(d8)
    assert Z.order == 2
    assert derived_subgroup(d8) == Z
    H, pi = quotient_group(d8, Z)
    assert H.order == 4
    assert H.exponent == 2
    assert pi.is_homomorphism()
    assert pi.kernel() == Z


def test_quotient_by_trivial_is_isomorphic(s3):
    H, pi = quotient_group(s3, s3.trivial_subgroup())
    assert H.order == s3.order
    assert sorted(pi.image) == list(range(s3.order))
    assert pi.is_homomorphism()


def test_quotient_requires_normal_subgroup(s3):
    transposition = next(x for x in range(6) if s3.element_orders[x] == 2)
    with raises(NotNormal):
        require_normal(s3.subgroup([0, transposition]))
    alternating = sylow_subgroup(s3, 3)
    H, _ = quotient_group(s3, alternating)
    assert H.order == 2


def test_sylow_orders(s3):
    assert sylow_subgroup(s3, 3).order == 3
    assert sylow_subgroup(s3, 2).order == 2
    assert sylow_subgroup(cyclic(9), 3).order == 9
    for group in (dihedral(12), heisenberg_mod_p(3), s3):
        for p in (2, 3):
            assert sylow_subgroup(group, p).order == p_part(group.order, p)


def test_automorphism_group_orders(d8):
    assert len(automorphism_group(cyclic(9))) == 6
    assert len(automorphism_group(catalog("elementary_abelian", [2, 2]))) == 6
    assert len(automorphism_group(generalized_quaternion(8))) == 24
    assert len(automorphism_group(d8)) == 8


def test_automorphisms_form_a_group_containing_inner(d8):
    autos = automorphism_group(d8)
    images = {a.image for a in autos}
    for a in autos:
        assert a.inverse().image in images
        for b in autos:
            assert a.compose(b).image in images
    inner = inner_automorphisms(d8)
    assert len(inner) == d8.order // center(d8).order
    assert {a.image for a in inner} <= images


def test_commuting_automorphisms(d8):
    assert is_commuting_automorphism(d8, GroupAutomorphism.identity(d8))
    assert all(is_commuting_automorphism(cyclic(6), a) for a in automorphism_group(cyclic(6)))
    assert not all(is_commuting_automorphism(d8, a) for a in automorphism_group(d8))


@pytest.mark.parametrize("group", [dihedral(12), generalized_quaternion(8), heisenberg_mod_p(3)])
def test_commuting_automorphisms_keep_sylows_invariant(group):
    for a in automorphism_group(group):
        if is_commuting_automorphism(group, a):
            for p in (2, 3):
                assert a.preserves(sylow_subgroup(group, p))


def test_nilpotency(s3):
    assert is_nilpotent(heisenberg_mod_p(3))
    assert is_nilpotent(cyclic(6))
    assert not is_nilpotent(s3)


def test_subgroup_validation(d8):
    with raises(BadParameters):
        Subgroup(d8, [1, 2])
    with raises(BadParameters):
        Subgroup(d8, [0, 1])
    assert d8.generated_subgroup([1]).order == 4


def test_abelian_witness_and_enumeration(s3):
    assert s3.whole().abelian_witness() is not None
    normals = abelian_normal_subgroups(s3)
    assert sorted(N.order for N in normals) == [1, 3]
    assert np.array_equal(s3.whole().array, np.arange(6))


def test_not_abelian_error_names_pair(s3):
    from domain.modules.abelian_structure import abelian_structure
    with raises(NotAbelian) as info:
        abelian_structure(s3.whole())
    a, b = info.value.pair
    assert s3.mul(a, b) != s3.mul(b, a)
