import pytest
from pytest import raises

from domain.errors import BadParameters, NotCentral, NotExtraspecialShape, NotSplit
from domain.groups.catalog import (
    cyclic,
    dihedral,
    direct_product,
    extraspecial_minus,
    extraspecial_plus,
    generalized_quaternion,
    heisenberg_mod_p,
    symmetric,
)
from domain.groups.structure import center, sylow_subgroup
from domain.splitting.commutator_form import (
    commutator_form,
    form_preserving_group,
    is_form_preserving,
    orthogonal_group,
    quadratic_form,
)
from domain.splitting.kernels import split_kernels
from domain.splitting.sections import (
    canonical_sections,
    is_homomorphic_section,
    is_split_extension,
    section_search,
)
from domain.wells.extension import extension_from


def central_extension(group):
    return extension_from(group, center(group))


@pytest.fixture(scope="module")
def d8():
    return central_extension(dihedral(8))


@pytest.fixture(scope="module")
def q8():
    return central_extension(generalized_quaternion(8))


@pytest.fixture(scope="module")
def s3():
    group = symmetric(3)
    return extension_from(group, sylow_subgroup(group, 3))


@pytest.fixture(scope="module")
def z2_by_z4():
    group = direct_product(cyclic(2), cyclic(4))
    return extension_from(group, group.subgroup([0, 1]))


def test_center_of_dihedral_and_quaternion_does_not_split(d8, q8):
    for ext in (d8, q8):
        assert not is_split_extension(ext).splits
        with raises(NotSplit):
            canonical_sections(ext)


def test_split_witness_gives_a_complement(s3):
    witness = is_split_extension(s3)
    assert witness.splits
    assert witness.complement.order == 2
    assert witness.transversal[0] == 0


def test_kernels_of_dihedral_center(d8):
    kernels = split_kernels(d8)
    assert len(kernels.c1_star) == 1
    assert len(kernels.c2_star) == 2
    assert len(kernels.c_star) == 2
    assert kernels.exact == {"seq_4_1": True, "seq_4_2": True, "seq_4_3": True}
    assert kernels.sequences_coincide


def test_kernels_of_quaternion_center(q8):
    kernels = split_kernels(q8)
    assert kernels.orders["c2_star"] == 6
    assert kernels.orders["aut_upper_N"] == 24
    assert all(value for value in kernels.exact.values())


def test_heisenberg_c1_star_is_trivial():
    h = heisenberg_mod_p(3)
    kernels = split_kernels(central_extension(h))
    assert len(kernels.c1_star) == 1
    assert len(kernels.c2_star) == 24
    assert len(kernels.c_star) == 48
    assert not kernels.sequences_coincide


def test_non_central_kernels_have_no_pair_sequence(s3):
    kernels = split_kernels(s3)
    assert kernels.c_star is None
    assert kernels.exact["seq_4_3"] is None
    assert len(kernels.c1_star) == 2


def test_canonical_sections_of_a_split_extension(s3):
    psi1, psi2, psi = canonical_sections(s3)
    assert psi is None
    assert len(psi1.domain) == 2
    assert len(psi2.domain) == 1
    assert is_homomorphic_section(s3, psi1)
    assert psi1.to_json()["sequence"] == 1


def test_canonical_sections_of_a_split_central_extension(z2_by_z4):
    ext = z2_by_z4
    assert ext.central
    psi1, psi2, psi = canonical_sections(ext)
    assert psi is not None
    assert len(psi.domain) == len(split_kernels(ext).c_star)
    for section in (psi1, psi2, psi):
        assert is_homomorphic_section(ext, section)
    data = psi.to_json()
    assert data["domain_order"] == len(psi.domain)
    assert set(data["images"][0]["element"]) == {"theta", "phi"}


@pytest.mark.parametrize("fixture, order", [("d8", 2), ("q8", 6)])
def test_section_search_finds_a_section_of_the_second_sequence(request, fixture, order):
    ext = request.getfixturevalue(fixture)
    section = section_search(ext, 2)
    assert section is not None
    assert len(section.domain) == order
    assert is_homomorphic_section(ext, section)


def test_section_search_argument_checks(s3, d8):
    with raises(NotCentral):
        section_search(s3, 3)
    with raises(BadParameters):
        section_search(d8, 4)


@pytest.mark.parametrize("fixture, symplectic, orthogonal", [("d8", 6, 2), ("q8", 6, 6)])
def test_forms_of_order_eight(request, fixture, symplectic, orthogonal):
    ext = request.getfixturevalue(fixture)
    form = commutator_form(ext)
    assert form.p == 2
    assert form.is_alternating()
    assert len(form_preserving_group(ext)) == symplectic
    assert len(orthogonal_group(ext)) == orthogonal
    assert len(orthogonal_group(ext)) == len(split_kernels(ext).c2_star)


def test_quaternion_squares_are_all_central(q8):
    assert list(quadratic_form(q8)) == [0, 1, 1, 1]


def test_heisenberg_form_preserving_group_is_c2_star():
    ext = central_extension(heisenberg_mod_p(3))
    form = commutator_form(ext)
    preserving = form_preserving_group(ext)
    assert len(preserving) == 24
    assert all(is_form_preserving(ext, phi, form) for phi in preserving)
    assert not quadratic_form(ext).any()
    assert {phi.image for phi in preserving} == {phi.image for phi in split_kernels(ext).c2_star}


@pytest.mark.parametrize("group, order", [(extraspecial_plus(2), 72), (extraspecial_minus(2), 120)])
def test_orthogonal_groups_of_order_32(group, order):
    assert len(orthogonal_group(central_extension(group))) == order


def test_form_needs_extraspecial_shape(s3):
    with raises(NotExtraspecialShape):
        commutator_form(s3)
    with raises(NotExtraspecialShape):
        commutator_form(central_extension(cyclic(4)))
