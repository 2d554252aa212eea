from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.cohomology.cochains import TwoCochain, cocycle_defect
from domain.cohomology.cohomology_group import CohomologyGroup, cohomology_group
from domain.errors import BadParameters, NotACocycle
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism, GroupHomomorphism, Subgroup
from domain.groups.structure import quotient_group, require_normal
from domain.modules.abelian_structure import AbelianStructure, abelian_structure
from domain.modules.action_matrix import ModuleAction, conjugation_action


@dataclass(frozen=True, eq=False)
class ExtensionData:
    """1 -> N -> G -> H -> 1 with N abelian, a transversal t and its factor set.

    ``mu[x, y]`` holds the coordinates of t(xy)^-1 t(x) t(y), so that
    t(x) t(y) = t(xy) mu(x, y). ``action[x]`` is the matrix of n -> t(x)^-1 n t(x).
    """
    G: FiniteGroup
    N: Subgroup
    H: FiniteGroup
    pi: GroupHomomorphism
    transversal: tuple
    mu: TwoCochain
    coeffs: AbelianStructure
    action: ModuleAction
    central: bool
    cohomology: CohomologyGroup
    bounds: Bounds = DEFAULT_BOUNDS

    @property
    def t(self) -> np.ndarray:
        return np.array(self.transversal, dtype=np.int64)

    @property
    def N_group(self) -> FiniteGroup:
        return self.N.as_group

    def is_coprime(self) -> bool:
        return int(np.gcd(self.H.order, self.N.order)) == 1

    def element_of(self, vector) -> int:
        """G-index of the element of N with the given coordinates."""
        return self.coeffs.from_coords(vector)

    def decompose(self, g: int):
        """(x, n) with g = t(x) n."""
        x = self.pi(g)
        return x, self.G.mul(self.G.inv(self.transversal[x]), g)

    def to_json(self) -> dict:
        return {
            "group": self.G.name,
            "order": self.G.order,
            "subgroup": list(self.N.members),
            "quotient_order": self.H.order,
            "moduli": list(self.coeffs.invariant_factors),
            "transversal": list(self.transversal),
            "central": self.central,
            "mu": self.mu.to_json(),
        }


def factor_set(G: FiniteGroup, N: Subgroup, H: FiniteGroup, coeffs: AbelianStructure, t: np.ndarray) -> TwoCochain:
    products = G.table[np.ix_(t, t)]
    defects = G.table[G.inverse[t[H.table]], products]
    if not N.mask[defects].all():
        raise BadParameters("Transversal products leave N; the transversal does not match the quotient")
    local = np.searchsorted(N.array, defects)
    return TwoCochain(H, coeffs.invariant_factors, coeffs.coords[local])


def _check_transversal(G: FiniteGroup, pi: GroupHomomorphism, t: Sequence[int]) -> tuple:
    t = tuple(int(g) for g in t)
    if len(t) != pi.target.order:
        raise BadParameters(f"Transversal must have {pi.target.order} entries, got {len(t)}")
    if t[0] != G.identity:
        raise BadParameters("Transversal must send the identity to the identity")
    for x, g in enumerate(t):
        if not 0 <= g < G.order or pi(g) != x:
            raise BadParameters(f"Transversal entry {g} does not lie in coset {x}")
    return t


def extension_from(
    G: FiniteGroup,
    N: Subgroup,
    bounds: Bounds = DEFAULT_BOUNDS,
    transversal: Optional[Sequence[int]] = None,
) -> ExtensionData:
    """Package (G, N) as an abelian extension; the default transversal takes the least index of each coset."""
    if N.parent is not G:
        raise BadParameters("N must be a subgroup of G")
    require_normal(N)
    coeffs = abelian_structure(N)
    H, pi = quotient_group(G, N)
    if transversal is None:
        coset_min = G.table[:, N.array].min(axis=1)
        transversal = np.unique(coset_min).tolist()
    t = _check_transversal(G, pi, transversal)

    action = conjugation_action(G, coeffs, t, H)
    mu = factor_set(G, N, H, coeffs, np.array(t, dtype=np.int64))
    defect = cocycle_defect(mu, action)
    if defect is not None:
        raise NotACocycle(f"Factor set fails the cocycle identity at {defect}")
    return ExtensionData(
        G=G,
        N=N,
        H=H,
        pi=pi,
        transversal=t,
        mu=mu,
        coeffs=coeffs,
        action=action,
        central=action.is_trivial(),
        cohomology=cohomology_group(H, coeffs, action, bounds),
        bounds=bounds,
    )


def with_transversal(ext: ExtensionData, transversal: Sequence[int]) -> ExtensionData:
    """Same extension, different coset representatives. The action and H^2 do not depend on the choice."""
    t = _check_transversal(ext.G, ext.pi, transversal)
    mu = factor_set(ext.G, ext.N, ext.H, ext.coeffs, np.array(t, dtype=np.int64))
    return ExtensionData(
        G=ext.G,
        N=ext.N,
        H=ext.H,
        pi=ext.pi,
        transversal=t,
        mu=mu,
        coeffs=ext.coeffs,
        action=ext.action,
        central=ext.central,
        cohomology=ext.cohomology,
        bounds=ext.bounds,
    )


def random_transversal(ext: ExtensionData, rng: np.random.Generator) -> ExtensionData:
    choices = rng.integers(0, ext.N.order, size=ext.H.order)
    t = [
        0 if x == 0 else ext.G.mul(ext.transversal[x], ext.N.members[int(choices[x])])
        for x in range(ext.H.order)
    ]
    return with_transversal(ext, t)


def module_action(ext: ExtensionData) -> ModuleAction:
    return ext.action


@lru_cache(maxsize=256)
def twisted_cohomology(ext: ExtensionData, phi_image: tuple) -> CohomologyGroup:
    """H^2 for the action x -> action(phi(x)); the extension's own group when that action is unchanged."""
    twisted = ext.action.twisted(GroupAutomorphism(ext.H, phi_image))
    if twisted.key() == ext.action.key():
        return ext.cohomology
    return cohomology_group(ext.H, ext.coeffs, twisted, ext.bounds)
