"""Automorphisms of G normalizing N as triples (theta, phi, chi).

gamma(t(x) n) = t(phi x) chi(x) theta(n), with chi written additively in N's
coordinates. gamma is an automorphism exactly when

  (2)  mu(phi x, phi y) - Theta mu(x, y) = chi(xy) - A(phi y) chi(x) - chi(y)
  (3)  Theta A(x) = A(phi x) Theta

for all x, y in H. Every other module reuses this transcription.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from domain.cohomology.cochains import OneCochain, coboundary_of
from domain.cohomology.cohomology_group import coboundary_solve
from domain.errors import BoundExceeded, DoesNotNormalize, TripleConditionsFail
from domain.groups.finite_group import GroupAutomorphism
from domain.wells.compatible import compatibility_failure, compatible_pairs
from domain.wells.extension import ExtensionData
from domain.wells.obstructions import pair_cocycle, cohomology_for


@dataclass(frozen=True)
class WellsTriple:
    theta: GroupAutomorphism
    phi: GroupAutomorphism
    chi: OneCochain

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta.image),
            "phi": list(self.phi.image),
            "chi": self.chi.to_json(),
        }


def triple_failure(ext: ExtensionData, triple: WellsTriple) -> Optional[Tuple[int, tuple]]:
    """(condition, where) for the first violated condition, or None."""
    x = compatibility_failure(ext, triple.theta, triple.phi)
    if x is not None:
        return 3, (x,)
    twisted = ext.action.twisted(triple.phi)
    lhs = pair_cocycle(ext, triple.theta, triple.phi)
    rhs = coboundary_of(triple.chi, twisted)
    bad = np.argwhere((lhs.values != rhs.values).any(axis=-1))
    if len(bad):
        return 2, tuple(int(i) for i in bad[0])
    return None


def triple_of(ext: ExtensionData, gamma: GroupAutomorphism) -> WellsTriple:
    if not gamma.preserves(ext.N):
        raise DoesNotNormalize("The automorphism does not map N onto itself")
    G, t = ext.G, ext.transversal
    theta = gamma.restrict(ext.N)
    phi = GroupAutomorphism(ext.H, tuple(ext.pi(gamma(t[x])) for x in range(ext.H.order)))
    values = np.array([
        ext.coeffs.to_coords(G.mul(G.inv(t[phi(x)]), gamma(t[x])))
        for x in range(ext.H.order)
    ], dtype=np.int64).reshape(ext.H.order, ext.coeffs.rank)
    return WellsTriple(theta, phi, OneCochain(ext.H, ext.coeffs.invariant_factors, values))


def automorphism_from_triple(ext: ExtensionData, triple: WellsTriple) -> GroupAutomorphism:
    failure = triple_failure(ext, triple)
    if failure is not None:
        raise TripleConditionsFail(*failure)
    G, N = ext.G, ext.N
    t = ext.t
    x = np.array(ext.pi.image, dtype=np.int64)
    n = G.table[G.inverse[t[x]], np.arange(G.order)]
    theta_n = N.array[np.array(triple.theta.image)[np.searchsorted(N.array, n)]]
    chi = np.array([ext.element_of(v) for v in triple.chi.values], dtype=np.int64)
    phi = np.array(triple.phi.image, dtype=np.int64)
    image = G.table[G.table[t[phi[x]], chi[x]], theta_n]
    return GroupAutomorphism.checked(G, image.tolist())


def valid_triples(ext: ExtensionData) -> List[WellsTriple]:
    """Every triple: a particular chi per compatible pair with trivial class, plus each one-cocycle."""
    limit = ext.bounds.max_pairs
    triples: List[WellsTriple] = []
    for pair in compatible_pairs(ext).pairs:
        cg = cohomology_for(ext, pair.phi)
        particular = coboundary_solve(pair_cocycle(ext, pair.theta, pair.phi), cg)
        if particular is None:
            continue
        if len(triples) + cg.z1_order > limit:
            raise BoundExceeded(f"More than {limit} triples")
        triples.extend(WellsTriple(pair.theta, pair.phi, particular + z) for z in cg.one_cocycles(limit))
    return triples
