import pytest
from pytest import raises

from domain.errors import NotCharacteristic, NotCompatible, PrimeDoesNotDivide, SylowNotInvariant
from domain.groups.automorphisms import automorphism_group, inversion
from domain.groups.catalog import alternating, cyclic, dihedral, heisenberg_mod_p
from domain.groups.finite_group import GroupAutomorphism
from domain.groups.structure import center, conjugate_subgroups, derived_subgroup, sylow_subgroup
from domain.reduction.sylow_reduction import (
    characteristic_restriction,
    corollary_predicates,
    index_kill_check,
    invariant_sylow,
    preimage,
    sub_extension,
    sylow_extend_check,
    sylow_lift_check,
    sylow_preimage,
)
from domain.wells.compatible import compatible_pairs
from domain.wells.extension import extension_from
from domain.wells.lifting import lift_automorphism


def order_three_in_cyclic(n):
    group = cyclic(n)
    N = group.subgroup([0] + [x for x in range(n) if group.element_orders[x] == 3])
    return extension_from(group, N)


@pytest.fixture
def d12_center():
    d12 = dihedral(12)
    return extension_from(d12, center(d12))


def test_sylow_preimages_contain_n(d12_center):
    ext = d12_center
    assert ext.H.order == 6
    for p, order in ((2, 4), (3, 6)):
        P = sylow_preimage(ext, p)
        assert P.order == order
        assert ext.N.is_subgroup_of(P)
        sub = sub_extension(ext, P)
        assert sub.extension.H.order == order // 2
        assert set(sub.to_parent) <= set(sylow_subgroup(ext.H, p).members)


def test_prime_must_divide_the_quotient(d12_center):
    with raises(PrimeDoesNotDivide):
        sylow_preimage(d12_center, 5)


def test_lift_check_agrees_with_global_lift(d12_center):
    ext = d12_center
    skipped = 0
    for phi in compatible_pairs(ext).c2:
        try:
            check = sylow_lift_check(ext, phi)
        except SylowNotInvariant as exc:
            assert exc.prime == 2
            skipped += 1
            continue
        assert check.consistent
        assert check.verdict == lift_automorphism(ext, phi).succeeded
        assert [r.prime for r in check.reports] == [2, 3]
    # conjugation by a 3-cycle fixes no Sylow 2-subgroup of S3
    assert skipped == 2


def test_invariant_sylow_searches_conjugates(d12_center):
    ext = d12_center
    for phi in automorphism_group(ext.H):
        try:
            S = invariant_sylow(ext, 2, phi)
        except SylowNotInvariant:
            continue
        assert phi.preserves(S)


def test_lift_check_on_a_p_group_quotient():
    d8 = dihedral(8)
    ext = extension_from(d8, center(d8))
    verdicts = []
    for phi in compatible_pairs(ext).c2:
        check = sylow_lift_check(ext, phi)
        assert check.consistent
        assert len(check.reports) == 1 and check.reports[0].P.order == 8
        verdicts.append(check.verdict)
        if check.verdict:
            assert check.witness is not None
    assert verdicts.count(True) == 2


def test_lift_check_rejects_phi_outside_c2():
    a4 = alternating(4)
    ext = extension_from(a4, derived_subgroup(a4))
    phi = inversion(ext.H)
    with raises(NotCompatible):
        sylow_lift_check(ext, phi)


def test_index_kills_the_obstruction(d12_center):
    ext = d12_center
    phi = next(
        phi for phi in compatible_pairs(ext).c2
        if not phi.is_identity() and phi.preserves(sylow_subgroup(ext.H, 2))
    )
    report = index_kill_check(ext, phi)
    assert report.passed
    for entry in report.entries:
        assert entry["index"] == {2: 3, 3: 2}[entry["p"]]
        if entry["local_lift"]:
            assert entry["killed"] is True


def test_index_kill_skips_primes_without_local_lift():
    d8 = dihedral(8)
    ext = extension_from(d8, center(d8))
    phi = next(phi for phi in compatible_pairs(ext).c2 if not lift_automorphism(ext, phi).succeeded)
    report = index_kill_check(ext, phi)
    assert report.entries == [{"p": 2, "index": 1, "local_lift": False, "killed": None}]
    assert report.passed


def test_extend_check_splits_by_prime():
    ext = order_three_in_cyclic(18)
    theta = inversion(ext.N_group)
    check = sylow_extend_check(ext, theta)
    local = {r.prime: r.local_verdict for r in check.reports}
    # inversion extends on the order 6 preimage but not on Z9
    assert local == {2: True, 3: False}
    assert not check.verdict
    assert check.consistent


def test_extend_check_identity_succeeds():
    ext = order_three_in_cyclic(18)
    check = sylow_extend_check(ext, GroupAutomorphism.identity(ext.N_group))
    assert check.verdict and check.consistent
    assert all(r.to_json()["obstruction"] is None for r in check.reports)


def test_report_json_carries_the_local_obstruction():
    ext = order_three_in_cyclic(9)
    check = sylow_extend_check(ext, inversion(ext.N_group))
    data = check.reports[0].to_json()
    assert data["p"] == 3 and data["P_order"] == 9
    assert data["local_lift"] is False
    assert data["obstruction"]["moduli"] == [3]


def test_characteristic_restriction():
    ext = order_three_in_cyclic(18)
    P = sylow_preimage(ext, 3)
    gamma = GroupAutomorphism(ext.G, tuple((5 * x) % 18 for x in range(18)))
    restricted = characteristic_restriction(ext, gamma, P)
    assert restricted.group.order == 9


def test_characteristic_restriction_needs_characteristic_sylow(d12_center):
    ext = d12_center
    P = preimage(ext, sylow_subgroup(ext.H, 2))
    with raises(NotCharacteristic):
        characteristic_restriction(ext, GroupAutomorphism.identity(ext.G), P)


def test_corollary_predicates(d12_center):
    report = corollary_predicates(d12_center, GroupAutomorphism.identity(d12_center.H))
    assert report.quotient_nilpotent is False
    assert report.phi_commuting is True
    assert report.sylows_invariant is True
    assert report.central_pair_mode["global"] is True
    assert report.to_json()["central_pair_mode"]["local"] == {"2": True, "3": True}


def test_corollary_predicates_with_theta():
    h = heisenberg_mod_p(3)
    ext = extension_from(h, center(h))
    theta = inversion(ext.N_group)
    report = corollary_predicates(ext, GroupAutomorphism.identity(ext.H), theta)
    assert report.quotient_nilpotent and report.sylows_invariant
    assert report.central_pair_mode == {"local": {"3": False}, "global": False}


def test_corollary_predicates_mark_a_prime_without_invariant_sylow(d12_center):
    ext = d12_center
    moving = [
        phi for phi in compatible_pairs(ext).c2
        if not any(phi.preserves(S) for S in conjugate_subgroups(sylow_subgroup(ext.H, 2)))
    ]
    assert len(moving) == 2
    for phi in moving:
        with raises(SylowNotInvariant):
            sylow_lift_check(ext, phi)
        report = corollary_predicates(ext, phi)
        assert report.sylows_invariant is False
        assert report.central_pair_mode["local"] == {"2": None}
        assert report.central_pair_mode["global"] == lift_automorphism(ext, phi).succeeded
