from dataclasses import dataclass
from typing import Optional

from domain.cohomology.cohomology_group import CohomologyClass, CohomologyGroup, coboundary_solve
from domain.errors import NotCentral
from domain.groups.finite_group import GroupAutomorphism
from domain.wells.compatible import require_compatible
from domain.wells.extension import ExtensionData
from domain.wells.obstructions import cohomology_for, pair_cocycle
from domain.wells.triples import WellsTriple, automorphism_from_triple


@dataclass(frozen=True)
class LiftResult:
    """A witness automorphism of G, or the class that obstructs one."""
    witness: Optional[GroupAutomorphism]
    obstruction: CohomologyClass
    coprime: bool = False

    @property
    def succeeded(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        return {
            "succeeded": self.succeeded,
            "coprime": self.coprime,
            "witness": list(self.witness.image) if self.witness is not None else None,
            "obstruction": None if self.succeeded else self.obstruction.representative.to_json(),
        }


def _realize(
    ext: ExtensionData,
    theta: GroupAutomorphism,
    phi: GroupAutomorphism,
    cg: CohomologyGroup,
) -> LiftResult:
    k = pair_cocycle(ext, theta, phi)
    obstruction = cg.class_of(k)
    chi = coboundary_solve(k, cg)
    witness = None if chi is None else automorphism_from_triple(ext, WellsTriple(theta, phi, chi))
    return LiftResult(witness, obstruction, ext.is_coprime())


def extend_automorphism(ext: ExtensionData, theta: GroupAutomorphism) -> LiftResult:
    """An automorphism of G restricting to theta on N and inducing the identity on G/N."""
    identity = GroupAutomorphism.identity(ext.H)
    require_compatible(ext, theta, identity)
    return _realize(ext, theta, identity, ext.cohomology)


def lift_automorphism(ext: ExtensionData, phi: GroupAutomorphism) -> LiftResult:
    """An automorphism of G centralizing N and inducing phi on G/N."""
    identity = GroupAutomorphism.identity(ext.N_group)
    require_compatible(ext, identity, phi)
    return _realize(ext, identity, phi, ext.cohomology)


def lift_pair(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> LiftResult:
    if not ext.central:
        raise NotCentral("Pair lifting with arbitrary (theta, phi) needs a central extension")
    return _realize(ext, theta, phi, ext.cohomology)


def lift_compatible_pair(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> LiftResult:
    require_compatible(ext, theta, phi)
    return _realize(ext, theta, phi, cohomology_for(ext, phi))
