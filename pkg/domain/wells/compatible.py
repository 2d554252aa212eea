from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple

import numpy as np

from domain.errors import BadParameters, BoundExceeded, NotCompatible
from domain.groups.automorphisms import automorphism_group, is_closed_under_composition
from domain.groups.finite_group import GroupAutomorphism
from domain.modules.action_matrix import ActionMatrix, restrict_to_matrix
from domain.wells.extension import ExtensionData


@dataclass(frozen=True)
class CompatiblePair:
    """theta on N (local numbering) and phi on H with theta A(x) = A(phi x) theta.

    Written with maps applied left to right this is theta^-1 alpha(x) theta = alpha(phi x).
    """
    theta: GroupAutomorphism
    phi: GroupAutomorphism

    def compose(self, other: "CompatiblePair") -> "CompatiblePair":
        """self after other, componentwise."""
        return CompatiblePair(self.theta.compose(other.theta), self.phi.compose(other.phi))

    def key(self) -> tuple:
        return self.theta.image, self.phi.image


class CompatiblePairs(NamedTuple):
    pairs: List[CompatiblePair]
    c1: List[GroupAutomorphism]
    c2: List[GroupAutomorphism]


def theta_matrix(ext: ExtensionData, theta: GroupAutomorphism) -> ActionMatrix:
    if theta.group is not ext.N_group:
        raise BadParameters("theta must be an automorphism of N")
    return restrict_to_matrix(theta, ext.coeffs)


def _intertwines(ext: ExtensionData, matrix: np.ndarray, phi_image) -> bool:
    A = ext.action.matrices
    moduli = np.array(ext.coeffs.invariant_factors, dtype=np.int64)[:, None]
    left = np.mod(np.einsum("ij,xjk->xik", matrix, A), moduli)
    right = np.mod(np.einsum("xij,jk->xik", A[list(phi_image)], matrix), moduli)
    return bool(np.array_equal(left, right))


def is_compatible(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism) -> bool:
    if phi.group is not ext.H:
        raise BadParameters("phi must be an automorphism of G/N")
    if ext.coeffs.rank == 0:
        return True
    return _intertwines(ext, theta_matrix(ext, theta).matrix, phi.image)


def require_compatible(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism):
    if not is_compatible(ext, theta, phi):
        raise NotCompatible("theta and phi do not intertwine the action of G/N on N")


def compatibility_failure(ext: ExtensionData, theta: GroupAutomorphism, phi: GroupAutomorphism):
    """First x with theta A(x) != A(phi x) theta, or None."""
    if ext.coeffs.rank == 0:
        return None
    matrix = theta_matrix(ext, theta).matrix
    for x in range(ext.H.order):
        if not _intertwines_at(ext, matrix, phi, x):
            return x
    return None


def _intertwines_at(ext: ExtensionData, matrix: np.ndarray, phi: GroupAutomorphism, x: int) -> bool:
    A = ext.action.matrices
    moduli = np.array(ext.coeffs.invariant_factors, dtype=np.int64)[:, None]
    return bool(np.array_equal(np.mod(matrix @ A[x], moduli), np.mod(A[phi(x)] @ matrix, moduli)))


@lru_cache(maxsize=64)
def compatible_pairs(ext: ExtensionData) -> CompatiblePairs:
    """C, C1 and C2 of the extension, each checked to be closed under composition."""
    bounds = ext.bounds
    aut_n = automorphism_group(ext.N_group, bounds)
    aut_h = automorphism_group(ext.H, bounds)
    if len(aut_n) * len(aut_h) > bounds.max_pairs:
        raise BoundExceeded(
            f"|Aut(N)| |Aut(H)| = {len(aut_n) * len(aut_h)} exceeds the pair bound {bounds.max_pairs}"
        )
    matrices = [theta_matrix(ext, theta).matrix for theta in aut_n]
    pairs = [
        CompatiblePair(theta, phi)
        for theta, matrix in zip(aut_n, matrices)
        for phi in aut_h
        if ext.central or ext.coeffs.rank == 0 or _intertwines(ext, matrix, phi.image)
    ]
    c1 = [p.theta for p in pairs if p.phi.is_identity()]
    c2 = [p.phi for p in pairs if p.theta.is_identity()]

    def compose(a, b):
        return a.compose(b)

    for name, elements in (("C", pairs), ("C1", c1), ("C2", c2)):
        if not is_closed_under_composition(elements, compose):
            raise ArithmeticError(f"{name} is not closed under composition")
    return CompatiblePairs(pairs, c1, c2)
