from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

import numpy as np

from domain.errors import NotAbelian
from domain.groups.finite_group import Subgroup


@dataclass(frozen=True, eq=False)
class AbelianStructure:
    """Coordinates for an abelian subgroup N as a sum of cyclic groups Z/d_1 + ... + Z/d_k.

    ``coords[i]`` is the coordinate vector of the i-th member of N (local
    numbering). Entry j of every vector is reduced mod d_j.
    """
    source: Subgroup
    invariant_factors: Tuple[int, ...]
    coords: np.ndarray
    basis: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @cached_property
    def moduli(self) -> np.ndarray:
        moduli = np.array(self.invariant_factors, dtype=np.int64)
        moduli.setflags(write=False)
        return moduli

    @cached_property
    def _lookup(self) -> Dict[tuple, int]:
        return {tuple(row): i for i, row in enumerate(self.coords.tolist())}

    def reduce(self, vectors) -> np.ndarray:
        return np.mod(vectors, self.moduli)

    def to_coords(self, g: int) -> np.ndarray:
        """Coordinates of the parent-group element g."""
        return self.coords[self.source.local_index(g)]

    def local_from_coords(self, vector) -> int:
        return self._lookup[tuple(int(v) for v in self.reduce(vector))]

    def from_coords(self, vector) -> int:
        """Parent-group index of the element with the given coordinates."""
        return self.source.members[self.local_from_coords(vector)]

    def unit(self, j: int) -> np.ndarray:
        vector = np.zeros(self.rank, dtype=np.int64)
        vector[j] = 1
        return vector

    def zero(self) -> np.ndarray:
        return np.zeros(self.rank, dtype=np.int64)


def abelian_structure(N: Subgroup) -> AbelianStructure:
    """Invariant factors by splitting off an element of largest order, one summand at a time."""
    witness = N.abelian_witness()
    if witness is not None:
        raise NotAbelian(*witness)
    A = N.as_group
    n = A.order

    basis: list = []
    span: Dict[int, Tuple[int, ...]] = {0: ()}
    while len(span) < n:
        best, best_order = 0, 0
        for x in range(n):
            if x in span:
                continue
            m, y = 1, x
            while y not in span:
                y = A.mul(y, x)
                m += 1
            if m > best_order:
                best, best_order = x, m
        coefficients = span[A.power(best, best_order)]
        x = best
        for (b, _), c in zip(basis, coefficients):
            x = A.mul(x, A.power(b, -(c // best_order)))
        basis.append((x, best_order))

        grown: Dict[int, Tuple[int, ...]] = {}
        for element, coeffs in span.items():
            y = element
            for a in range(best_order):
                grown[y] = coeffs + (a,)
                y = A.mul(y, x)
        span = grown

    coords = np.zeros((n, len(basis)), dtype=np.int64)
    for element, coeffs in span.items():
        coords[element] = coeffs[::-1]
    coords.setflags(write=False)
    return AbelianStructure(
        source=N,
        invariant_factors=tuple(order for _, order in reversed(basis)),
        coords=coords,
        basis=tuple(N.members[b] for b, _ in reversed(basis)),
    )
