"""Z^2, B^2 and H^2 of a finite group with coefficients in a finite abelian module.

Unknowns are the coordinates of f(x, y) for x, y != 1. The unknown for
coordinate i of f(x, y) sits at ((x - 1) m + (y - 1)) k + i where m = |H| - 1
and k is the number of cyclic summands; 1-cochains use (x - 1) k + i.
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.cohomology.cochains import OneCochain, TwoCochain, coboundary_of, cocycle_defect
from domain.cohomology.integer_linalg import (
    SmithForm,
    enumerate_span,
    kernel_generators,
    smith_normal_form,
    subgroup_order,
)
from domain.errors import BadParameters, BoundExceeded, NotACocycle, ParentMismatch
from domain.groups.finite_group import FiniteGroup
from domain.modules.abelian_structure import AbelianStructure
from domain.modules.action_matrix import ModuleAction


def _product(values) -> int:
    result = 1
    for v in values:
        result *= int(v)
    return result


def coboundary_matrix(H: FiniteGroup, action: ModuleAction) -> np.ndarray:
    """Integer matrix of chi -> delta chi on unknowns, before reduction mod the d_i."""
    m = H.order - 1
    k = len(action.moduli)
    T = H.table
    A = action.matrices
    delta = np.zeros((m * m * k, m * k), dtype=np.int64)
    for x in range(1, H.order):
        for y in range(1, H.order):
            xy = T[x, y]
            for i in range(k):
                row = ((x - 1) * m + (y - 1)) * k + i
                if xy:
                    delta[row, (xy - 1) * k + i] += 1
                delta[row, (x - 1) * k:x * k] -= A[y, i]
                delta[row, (y - 1) * k + i] -= 1
    return delta


def cocycle_equations(H: FiniteGroup, action: ModuleAction) -> Iterator[Tuple[List[int], List[int], int]]:
    """f(xy, z) + A(z) f(x, y) - f(x, yz) - f(y, z) = 0, one congruence per coordinate."""
    m = H.order - 1
    k = len(action.moduli)
    T = H.table
    A = action.matrices

    def unknown(x, y, i):
        return ((x - 1) * m + (y - 1)) * k + i

    for x in range(1, H.order):
        for y in range(1, H.order):
            for z in range(1, H.order):
                xy, yz = int(T[x, y]), int(T[y, z])
                for i, d in enumerate(action.moduli):
                    terms = {}
                    if xy:
                        terms[unknown(xy, z, i)] = terms.get(unknown(xy, z, i), 0) + 1
                    for j in range(k):
                        if A[z, i, j]:
                            u = unknown(x, y, j)
                            terms[u] = terms.get(u, 0) + int(A[z, i, j])
                    if yz:
                        terms[unknown(x, yz, i)] = terms.get(unknown(x, yz, i), 0) - 1
                    terms[unknown(y, z, i)] = terms.get(unknown(y, z, i), 0) - 1
                    indices = [u for u, c in terms.items() if c % d]
                    if indices:
                        yield indices, [terms[u] for u in indices], d


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """Orders of Z^2, B^2, H^2 and Z^1, with the coboundary system already in Smith form."""
    H: FiniteGroup
    coeffs: AbelianStructure
    action: ModuleAction
    z2_order: int
    b2_order: int
    h2_order: int
    z1_order: int
    solver: SmithForm
    z1_generators: np.ndarray

    @property
    def moduli(self) -> tuple:
        return self.action.moduli

    def class_of(self, f: TwoCochain) -> "CohomologyClass":
        defect = cocycle_defect(f, self.action)
        if defect is not None:
            raise NotACocycle(f"Cocycle identity fails at {defect}")
        return CohomologyClass(self, f)

    def zero_class(self) -> "CohomologyClass":
        return CohomologyClass(self, TwoCochain.zero(self.H, self.moduli))

    def one_cocycles(self, limit: int = DEFAULT_BOUNDS.max_pairs) -> List[OneCochain]:
        """Every chi with delta chi = 0, the zero cochain first."""
        if self.z1_order > limit:
            raise BoundExceeded(f"|Z^1| = {self.z1_order} exceeds the bound {limit}")
        unknown_moduli = list(self.moduli) * (self.H.order - 1)
        return [
            OneCochain.from_unknowns(self.H, self.moduli, vector)
            for vector in enumerate_span(self.z1_generators, unknown_moduli, limit)
        ]


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    parent: CohomologyGroup
    representative: TwoCochain

    def is_trivial(self) -> bool:
        return coboundary_solve(self.representative, self.parent) is not None

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        _require_parent(self, other)
        return CohomologyClass(self.parent, self.representative + other.representative)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.parent, -self.representative)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def scale(self, n: int) -> "CohomologyClass":
        return CohomologyClass(self.parent, self.representative.scale(n))

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomologyClass) and class_eq(self, other)

    __hash__ = None


def _require_parent(a: CohomologyClass, b: CohomologyClass):
    if a.parent is not b.parent:
        raise ParentMismatch("Cohomology classes belong to different cohomology groups")


def cohomology_group(
    H: FiniteGroup,
    coeffs: AbelianStructure,
    action: ModuleAction,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> CohomologyGroup:
    if action.H is not H or action.moduli != coeffs.invariant_factors:
        raise BadParameters("The action does not match the group and the coefficient module")
    m = H.order - 1
    k = coeffs.rank
    moduli = coeffs.invariant_factors
    unknowns = m * m * k
    if H.order * H.order * k > bounds.max_unknowns:
        raise BoundExceeded(
            f"Cocycle system with |H|^2 k = {H.order * H.order * k} exceeds the bound {bounds.max_unknowns}"
        )

    unknown_moduli = list(moduli) * (m * m)
    chain_moduli = list(moduli) * m
    delta = coboundary_matrix(H, action)
    system = np.hstack([delta, np.diag(np.array(unknown_moduli, dtype=np.int64))]) if unknowns else delta
    solver = smith_normal_form(system)

    total = _product(unknown_moduli)
    b2 = total // solver.cokernel_torsion() if unknowns else 1
    z2 = subgroup_order(kernel_generators(cocycle_equations(H, action), unknown_moduli), unknown_moduli)
    if z2 % b2:
        raise ArithmeticError(f"|B^2| = {b2} does not divide |Z^2| = {z2}")

    z1_equations = (
        (list(np.flatnonzero(np.mod(row, d))), [int(c) for c in row[np.flatnonzero(np.mod(row, d))]], d)
        for row, d in zip(delta, unknown_moduli)
        if np.mod(row, d).any()
    )
    z1_generators = kernel_generators(z1_equations, chain_moduli)

    return CohomologyGroup(
        H=H,
        coeffs=coeffs,
        action=action,
        z2_order=z2,
        b2_order=b2,
        h2_order=z2 // b2,
        z1_order=_product(chain_moduli) // b2,
        solver=solver,
        z1_generators=z1_generators,
    )


def coboundary_solve(f: TwoCochain, cg: CohomologyGroup) -> Optional[OneCochain]:
    """chi with delta chi = f, or None when f is not a coboundary."""
    defect = cocycle_defect(f, cg.action)
    if defect is not None:
        raise NotACocycle(f"Cocycle identity fails at {defect}")
    m = cg.H.order - 1
    k = len(cg.moduli)
    if m * k == 0:
        return OneCochain.zero(cg.H, cg.moduli) if f.is_zero() else None
    solution = cg.solver.solve(f.unknowns())
    if solution is None:
        return None
    chi = OneCochain.from_unknowns(cg.H, cg.moduli, solution[: m * k] % np.array(list(cg.moduli) * m, dtype=object))
    return chi


def class_eq(a: CohomologyClass, b: CohomologyClass) -> bool:
    _require_parent(a, b)
    return coboundary_solve(a.representative - b.representative, a.parent) is not None


def is_coboundary_of(chi: OneCochain, f: TwoCochain, action: ModuleAction) -> bool:
    return coboundary_of(chi, action) == f
