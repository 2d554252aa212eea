from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from domain.groups.automorphisms import automorphism_group
from domain.groups.finite_group import GroupAutomorphism
from domain.wells.compatible import CompatiblePair
from domain.wells.extension import ExtensionData


@dataclass(frozen=True)
class AutSubgroups:
    """Aut_N(G), Aut^N(G), Aut_N^H(G) and Aut^{N,H}(G), each sorted by image."""
    aut_N_of_G: List[GroupAutomorphism]
    aut_upper_N: List[GroupAutomorphism]
    aut_N_H: List[GroupAutomorphism]
    aut_upper_N_H: List[GroupAutomorphism]

    def orders(self) -> dict:
        return {
            "aut_N": len(self.aut_N_of_G),
            "aut_upper_N": len(self.aut_upper_N),
            "aut_N_H": len(self.aut_N_H),
            "aut_upper_N_H": len(self.aut_upper_N_H),
        }


def centralizes_n(ext: ExtensionData, gamma: GroupAutomorphism) -> bool:
    image = np.array(gamma.image)
    return bool(np.array_equal(image[ext.N.array], ext.N.array))


def induces_identity(ext: ExtensionData, gamma: GroupAutomorphism) -> bool:
    pi = np.array(ext.pi.image)
    return bool(np.array_equal(pi[np.array(gamma.image)], pi))


def tau(ext: ExtensionData, gamma: GroupAutomorphism) -> CompatiblePair:
    """(restriction to N, induced automorphism of G/N) of an automorphism normalizing N."""
    theta = gamma.restrict(ext.N)
    phi = GroupAutomorphism(ext.H, tuple(ext.pi(gamma(t)) for t in ext.transversal))
    return CompatiblePair(theta, phi)


def aut_subgroups(ext: ExtensionData) -> AutSubgroups:
    normalizing = [a for a in automorphism_group(ext.G, ext.bounds) if a.preserves(ext.N)]
    flags: List[Tuple[GroupAutomorphism, bool, bool]] = [
        (a, centralizes_n(ext, a), induces_identity(ext, a)) for a in normalizing
    ]
    return AutSubgroups(
        aut_N_of_G=normalizing,
        aut_upper_N=[a for a, c, _ in flags if c],
        aut_N_H=[a for a, _, i in flags if i],
        aut_upper_N_H=[a for a, c, i in flags if c and i],
    )
