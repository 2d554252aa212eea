"""Forms on G/N for groups with N = Z(G) = [G, G] of prime order and G/N elementary abelian.

rho(x, y) is the commutator [t(x), t(y)] and q(x) the p-th power t(x)^p, both
read as elements of Z/p. Neither depends on the transversal.
"""
from dataclasses import dataclass
from typing import List

import numpy as np
from sympy import isprime

from domain.errors import NotExtraspecialShape
from domain.groups.automorphisms import automorphism_group
from domain.groups.finite_group import GroupAutomorphism
from domain.groups.structure import center, derived_subgroup
from domain.wells.extension import ExtensionData


@dataclass(frozen=True, eq=False)
class CommutatorForm:
    p: int
    values: np.ndarray

    def __call__(self, x: int, y: int) -> int:
        return int(self.values[x, y])

    def is_bilinear(self, table: np.ndarray) -> bool:
        v = self.values
        left = v[table] - (v[:, None, :] + v[None, :, :])
        return not np.mod(left, self.p).any()

    def is_alternating(self) -> bool:
        return not np.diagonal(self.values).any()


def require_extraspecial_shape(ext: ExtensionData) -> int:
    G = ext.G
    p = ext.N.order
    if not isprime(p):
        raise NotExtraspecialShape(f"|N| = {p} is not prime")
    if center(G) != ext.N:
        raise NotExtraspecialShape("N is not the center of G")
    if derived_subgroup(G) != ext.N:
        raise NotExtraspecialShape("N is not the derived subgroup of G")
    if not ext.H.is_abelian() or ext.H.exponent != p:
        raise NotExtraspecialShape(f"G/N is not elementary abelian of exponent {p}")
    return p


def _n_coordinate(ext: ExtensionData, elements: np.ndarray) -> np.ndarray:
    local = np.searchsorted(ext.N.array, elements)
    return ext.coeffs.coords[local][..., 0]


def commutator_form(ext: ExtensionData) -> CommutatorForm:
    p = require_extraspecial_shape(ext)
    G = ext.G
    t = ext.t
    inverse = G.inverse
    commutators = G.table[G.table[inverse[t][:, None], inverse[t][None, :]], G.table[np.ix_(t, t)]]
    form = CommutatorForm(p, _n_coordinate(ext, commutators))
    if not (form.is_alternating() and form.is_bilinear(ext.H.table)):
        raise NotExtraspecialShape("The commutator map is not an alternating bilinear form")
    return form


def is_form_preserving(ext: ExtensionData, phi: GroupAutomorphism, form: CommutatorForm = None) -> bool:
    form = form or commutator_form(ext)
    image = list(phi.image)
    return bool(np.array_equal(form.values[np.ix_(image, image)], form.values))


def quadratic_form(ext: ExtensionData) -> np.ndarray:
    """x -> t(x)^p in Z/p."""
    p = require_extraspecial_shape(ext)
    powers = np.array([ext.G.power(int(g), p) for g in ext.t], dtype=np.int64)
    return _n_coordinate(ext, powers)


def form_preserving_group(ext: ExtensionData) -> List[GroupAutomorphism]:
    form = commutator_form(ext)
    return [phi for phi in automorphism_group(ext.H, ext.bounds) if is_form_preserving(ext, phi, form)]


def orthogonal_group(ext: ExtensionData) -> List[GroupAutomorphism]:
    """Automorphisms of G/N preserving both rho and q."""
    q = quadratic_form(ext)
    return [phi for phi in form_preserving_group(ext) if np.array_equal(q[list(phi.image)], q)]
