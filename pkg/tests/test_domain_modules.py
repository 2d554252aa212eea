import numpy as np
import pytest

from domain.groups.automorphisms import automorphism_group, inversion
from domain.groups.catalog import cyclic, dihedral, direct_product, elementary_abelian, heisenberg_mod_p, symmetric
from domain.groups.finite_group import GroupAutomorphism
from domain.groups.structure import center, sylow_subgroup
from domain.modules.abelian_structure import abelian_structure
from domain.modules.action_matrix import ActionMatrix, restrict_to_matrix
from domain.wells.extension import extension_from, module_action


@pytest.mark.parametrize("group, factors", [
    (cyclic(2), (2,)),
    (elementary_abelian(2, 2), (2, 2)),
    (cyclic(6), (6,)),
    (elementary_abelian(3, 2), (3, 3)),
])
def test_invariant_factors(group, factors):
    s = abelian_structure(group.whole())
    assert s.invariant_factors == factors
    assert int(np.prod(factors)) == group.order


def test_coordinates_are_an_isomorphism():
    group = direct_product(cyclic(2), cyclic(4))
    s = abelian_structure(group.whole())
    assert s.invariant_factors == (2, 4)
    for a in range(group.order):
        assert s.from_coords(s.to_coords(a)) == a
        for b in range(group.order):
            expected = s.reduce(s.to_coords(a) + s.to_coords(b))
            assert np.array_equal(s.to_coords(group.mul(a, b)), expected)


def test_central_extension_acts_trivially():
    h = heisenberg_mod_p(3)
    ext = extension_from(h, center(h))
    assert ext.central
    assert module_action(ext).is_trivial()


def test_transposition_acts_by_negation_on_a3():
    s3 = symmetric(3)
    ext = extension_from(s3, sylow_subgroup(s3, 3))
    action = module_action(ext)
    assert action[0].is_identity()
    assert action[1].matrix.tolist() == [[2]]
    assert action.is_homomorphism()


def test_reflection_acts_by_negation_on_rotations():
    d8 = dihedral(8)
    rotations = d8.generated_subgroup([1])
    ext = extension_from(d8, rotations)
    assert ext.coeffs.invariant_factors == (4,)
    assert module_action(ext)[1].matrix.tolist() == [[3]]


def test_restrict_to_matrix_examples():
    z3 = cyclic(3)
    s3 = abelian_structure(z3.whole())
    assert restrict_to_matrix(GroupAutomorphism.identity(s3.source.as_group), s3).is_identity()
    assert restrict_to_matrix(inversion(s3.source.as_group), s3).matrix.tolist() == [[2]]

    v4 = elementary_abelian(2, 2)
    s = abelian_structure(v4.whole())
    basis = [s.local_from_coords(s.unit(j)) for j in range(2)]
    swap = [0] * 4
    for x in range(4):
        c = s.coords[x]
        swap[s.local_from_coords([c[1], c[0]])] = x
    theta = GroupAutomorphism.checked(s.source.as_group, swap)
    assert restrict_to_matrix(theta, s).matrix.tolist() == [[0, 1], [1, 0]]
    assert theta(basis[0]) == basis[1]


def test_restrict_to_matrix_is_injective_and_multiplicative():
    v4 = elementary_abelian(2, 2)
    s = abelian_structure(v4.whole())
    group = s.source.as_group
    autos = automorphism_group(group)
    matrices = {a.image: restrict_to_matrix(a, s) for a in autos}
    assert len(set(matrices.values())) == len(autos)
    for a in autos:
        for b in autos:
            assert matrices[a.compose(b).image] == matrices[a.image].compose(matrices[b.image])
    assert ActionMatrix.identity((2, 2)) in matrices.values()
