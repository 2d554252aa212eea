"""Wells cocycles and their classes.

Every cocycle here is the additive form of mu(phi x, phi y) theta(mu(x, y))^-1,
that is ``mu[phi x, phi y] - Theta mu[x, y]``, specialised to phi = 1 or
theta = 1. It is a 2-cocycle for the action x -> A(phi x).
"""
import numpy as np

from domain.cohomology.cochains import TwoCochain
from domain.cohomology.cohomology_group import CohomologyClass, CohomologyGroup
from domain.errors import BadParameters, NotCentral
from domain.groups.finite_group import GroupAutomorphism
from domain.wells.compatible import require_compatible, theta_matrix
from domain.wells.extension import ExtensionData, twisted_cohomology


def apply_theta(ext: ExtensionData, theta: GroupAutomorphism, f: TwoCochain) -> TwoCochain:
    """(x, y) -> Theta f(x, y)"""
    matrix = theta_matrix(ext, theta).matrix
    return TwoCochain(f.H, f.moduli, np.einsum("ij,xyj->xyi", matrix, f.values))


def apply_phi(phi: GroupAutomorphism, f: TwoCochain) -> TwoCochain:
    """(x, y) -> f(phi x, phi y)"""
    image = list(phi.image)
    return TwoCochain(f.H, f.moduli, f.values[np.ix_(image, image)])


def pair_cocycle(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> TwoCochain:
    return apply_phi(phi, ext.mu) - apply_theta(ext, theta, ext.mu)


def wells_cocycle_theta(ext: ExtensionData, theta: GroupAutomorphism) -> TwoCochain:
    """k_theta = mu - Theta mu"""
    identity = GroupAutomorphism.identity(ext.H)
    require_compatible(ext, theta, identity)
    return pair_cocycle(ext, theta, identity)


def wells_cocycle_phi(ext: ExtensionData, phi: GroupAutomorphism) -> TwoCochain:
    """k_phi = mu(phi x, phi y) - mu(x, y)"""
    identity = GroupAutomorphism.identity(ext.N_group)
    require_compatible(ext, identity, phi)
    return pair_cocycle(ext, identity, phi)


def wells_cocycle_pair(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> TwoCochain:
    if not ext.central:
        raise NotCentral("The pair cocycle needs N inside the center of G")
    return pair_cocycle(ext, theta, phi)


def wells_cocycle_compatible(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> TwoCochain:
    """The pair cocycle for any compatible (theta, phi); its action is x -> A(phi x)."""
    require_compatible(ext, theta, phi)
    return pair_cocycle(ext, theta, phi)


def cohomology_for(ext: ExtensionData, phi: GroupAutomorphism) -> CohomologyGroup:
    return twisted_cohomology(ext, phi.image)


def lambda1(ext: ExtensionData, theta: GroupAutomorphism) -> CohomologyClass:
    return ext.cohomology.class_of(wells_cocycle_theta(ext, theta))


def lambda2(ext: ExtensionData, phi: GroupAutomorphism) -> CohomologyClass:
    return ext.cohomology.class_of(wells_cocycle_phi(ext, phi))


def lambda_pair(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> CohomologyClass:
    return ext.cohomology.class_of(wells_cocycle_pair(ext, theta, phi))


def lambda_compatible(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> CohomologyClass:
    return cohomology_for(ext, phi).class_of(wells_cocycle_compatible(ext, theta, phi))


def h2_conjugation_action(ext: ExtensionData, automorphism: GroupAutomorphism, cls: CohomologyClass) -> CohomologyClass:
    """k -> Theta k for theta in C1, k -> k(phi x, phi y) for phi in C2."""
    if cls.parent is not ext.cohomology:
        raise BadParameters("The class does not belong to the extension's H^2")
    if automorphism.group is ext.N_group:
        require_compatible(ext, automorphism, GroupAutomorphism.identity(ext.H))
        return ext.cohomology.class_of(apply_theta(ext, automorphism, cls.representative))
    if automorphism.group is ext.H:
        require_compatible(ext, GroupAutomorphism.identity(ext.N_group), automorphism)
        return ext.cohomology.class_of(apply_phi(automorphism, cls.representative))
    raise BadParameters("The automorphism acts neither on N nor on G/N")
