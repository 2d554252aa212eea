"""Prime-by-prime criteria for lifting and extending automorphisms.

For a prime p dividing |G/N|, P is the preimage in G of a Sylow p-subgroup of
G/N, and (P, N) is again an abelian extension. Its quotient P/N sits inside
G/N through ``SubExtension.to_parent``.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from domain.errors import BadParameters, NotCharacteristic, NotCompatible, PrimeDoesNotDivide, SylowNotInvariant
from domain.groups.automorphisms import automorphism_group, is_commuting_automorphism
from domain.groups.finite_group import GroupAutomorphism, Subgroup
from domain.groups.structure import (
    conjugate_subgroups,
    is_characteristic_under,
    is_nilpotent,
    prime_divisors,
    sylow_subgroup,
)
from domain.wells.compatible import is_compatible
from domain.wells.extension import ExtensionData, extension_from
from domain.wells.lifting import LiftResult, extend_automorphism, lift_automorphism, lift_pair
from domain.wells.obstructions import lambda2


@dataclass(frozen=True)
class SubExtension:
    """(P, N) as an extension of its own, with P/N identified inside G/N."""
    P: Subgroup
    extension: ExtensionData
    to_parent: tuple

    def from_parent(self) -> Dict[int, int]:
        return {h: y for y, h in enumerate(self.to_parent)}

    def restrict_phi(self, phi: GroupAutomorphism) -> GroupAutomorphism:
        back = self.from_parent()
        try:
            image = tuple(back[phi(h)] for h in self.to_parent)
        except KeyError as exc:
            raise BadParameters("phi does not leave P/N invariant") from exc
        return GroupAutomorphism(self.extension.H, image)

    def restrict_theta(self, theta: GroupAutomorphism) -> GroupAutomorphism:
        """theta on N, renumbered for N inside P; the local numbering of N is unchanged."""
        return GroupAutomorphism(self.extension.N_group, theta.image)


def quotient_members(ext: ExtensionData, P: Subgroup) -> Subgroup:
    """P/N as a subgroup of G/N."""
    return Subgroup(ext.H, {ext.pi(g) for g in P.members})


def preimage(ext: ExtensionData, S: Subgroup) -> Subgroup:
    return Subgroup(ext.G, [g for g in range(ext.G.order) if ext.pi(g) in S])


def sub_extension(ext: ExtensionData, P: Subgroup) -> SubExtension:
    if not ext.N.is_subgroup_of(P):
        raise BadParameters("P must contain N")
    local = P.as_group
    inner_n = Subgroup(local, [P.local_index(n) for n in ext.N.members])
    inner = extension_from(local, inner_n, ext.bounds)
    to_parent = tuple(ext.pi(P.members[t]) for t in inner.transversal)
    return SubExtension(P, inner, to_parent)


def _require_prime_divides(ext: ExtensionData, p: int):
    if ext.H.order % p:
        raise PrimeDoesNotDivide(f"{p} does not divide |G/N| = {ext.H.order}")


def sylow_preimage(ext: ExtensionData, p: int) -> Subgroup:
    """pi^-1 of the deterministic Sylow p-subgroup of G/N."""
    _require_prime_divides(ext, p)
    return preimage(ext, sylow_subgroup(ext.H, p))


def invariant_sylow(ext: ExtensionData, p: int, phi: GroupAutomorphism) -> Subgroup:
    """A Sylow p-subgroup of G/N mapped onto itself by phi, the deterministic one when it qualifies."""
    _require_prime_divides(ext, p)
    for S in conjugate_subgroups(sylow_subgroup(ext.H, p)):
        if phi.preserves(S):
            return S
    raise SylowNotInvariant(p)


def _ordered_sylows(ext: ExtensionData, p: int) -> List[Subgroup]:
    first = sylow_subgroup(ext.H, p)
    return [first] + [S for S in conjugate_subgroups(first) if S != first]


@dataclass(frozen=True)
class SylowReport:
    prime: int
    P: Subgroup
    local: Optional[LiftResult]

    @property
    def index(self) -> int:
        return self.P.parent.order // self.P.order

    @property
    def local_verdict(self) -> bool:
        return self.local is not None and self.local.succeeded

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "P_order": self.P.order,
            "local_lift": self.local_verdict,
            "obstruction": (
                self.local.obstruction.representative.to_json()
                if self.local is not None and not self.local.succeeded else None
            ),
        }


@dataclass(frozen=True)
class SylowCheck:
    verdict: bool
    reports: List[SylowReport]
    global_result: Optional[LiftResult]

    @property
    def consistent(self) -> bool:
        """The local verdicts agree with the global one."""
        global_verdict = self.global_result is not None and self.global_result.succeeded
        return self.verdict == global_verdict

    @property
    def witness(self) -> Optional[GroupAutomorphism]:
        return self.global_result.witness if self.global_result is not None else None


def sylow_lift_check(ext: ExtensionData, phi: GroupAutomorphism) -> SylowCheck:
    """Lift phi's restriction to each invariant Sylow; on success produce the global lift."""
    require_c2(ext, phi)
    reports = []
    for p in prime_divisors(ext.H.order):
        P = preimage(ext, invariant_sylow(ext, p, phi))
        sub = sub_extension(ext, P)
        reports.append(SylowReport(p, P, lift_automorphism(sub.extension, sub.restrict_phi(phi))))
    verdict = all(r.local_verdict for r in reports)
    return SylowCheck(verdict, reports, lift_automorphism(ext, phi))


@dataclass
class IndexKillReport:
    entries: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e["killed"] for e in self.entries if e["local_lift"])


def index_kill_check(ext: ExtensionData, phi: GroupAutomorphism, check: Optional[SylowCheck] = None) -> IndexKillReport:
    """[G/N : P/N] [k_phi] = 0 for every prime whose local restriction lifts."""
    check = check or sylow_lift_check(ext, phi)
    obstruction = lambda2(ext, phi)
    report = IndexKillReport()
    for r in check.reports:
        index = r.index
        killed = obstruction.scale(index).is_trivial() if r.local_verdict else None
        report.entries.append({"p": r.prime, "index": index, "local_lift": r.local_verdict, "killed": killed})
    return report


def characteristic_restriction(ext: ExtensionData, gamma: GroupAutomorphism, P: Subgroup) -> GroupAutomorphism:
    """gamma restricted to P, for P/N characteristic in G/N."""
    S = quotient_members(ext, P)
    if not is_characteristic_under(S, automorphism_group(ext.H, ext.bounds)):
        raise NotCharacteristic("P/N is not characteristic in G/N")
    return gamma.restrict(P)


def sylow_extend_check(ext: ExtensionData, theta: GroupAutomorphism) -> SylowCheck:
    """Extend theta on each Sylow preimage; theta extends on G exactly when every local extension exists."""
    identity = GroupAutomorphism.identity(ext.H)
    reports = []
    for p in prime_divisors(ext.H.order):
        P = sylow_preimage(ext, p)
        sub = sub_extension(ext, P)
        local_theta = sub.restrict_theta(theta)
        local_identity = GroupAutomorphism.identity(sub.extension.H)
        local = (
            extend_automorphism(sub.extension, local_theta)
            if is_compatible(sub.extension, local_theta, local_identity) else None
        )
        reports.append(SylowReport(p, P, local))
    verdict = all(r.local_verdict for r in reports)
    global_result = extend_automorphism(ext, theta) if is_compatible(ext, theta, identity) else None
    return SylowCheck(verdict, reports, global_result)


@dataclass
class CorollaryReport:
    quotient_nilpotent: bool
    phi_commuting: bool
    sylows_invariant: bool
    central_pair_mode: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "quotient_nilpotent": self.quotient_nilpotent,
            "phi_commuting": self.phi_commuting,
            "sylows_invariant": self.sylows_invariant,
            "central_pair_mode": self.central_pair_mode,
        }


def corollary_predicates(
    ext: ExtensionData,
    phi: GroupAutomorphism,
    theta: Optional[GroupAutomorphism] = None,
) -> CorollaryReport:
    primes = prime_divisors(ext.H.order)
    sylows_invariant = all(
        phi.preserves(S) for p in primes for S in _ordered_sylows(ext, p)
    )
    report = CorollaryReport(
        quotient_nilpotent=is_nilpotent(ext.H),
        phi_commuting=is_commuting_automorphism(ext.H, phi),
        sylows_invariant=sylows_invariant,
    )
    if ext.central:
        theta = theta or GroupAutomorphism.identity(ext.N_group)
        local = {}
        try:
            for p in primes:
                sub = sub_extension(ext, preimage(ext, invariant_sylow(ext, p, phi)))
                result = lift_pair(sub.extension, sub.restrict_theta(theta), sub.restrict_phi(phi))
                local[str(p)] = result.succeeded
        except SylowNotInvariant as exc:
            local[str(exc.prime)] = None
        report.central_pair_mode = {
            "local": local,
            "global": lift_pair(ext, theta, phi).succeeded,
        }
    return report


def require_c2(ext: ExtensionData, phi: GroupAutomorphism):
    if not is_compatible(ext, GroupAutomorphism.identity(ext.N_group), phi):
        raise NotCompatible("phi does not preserve the action of G/N on N")
