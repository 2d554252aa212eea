from dataclasses import dataclass
from typing import Sequence

import numpy as np

from domain.errors import BadParameters
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism
from domain.modules.abelian_structure import AbelianStructure


def _reduce_rows(matrix, moduli) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return matrix.reshape(matrix.shape)
    return np.mod(matrix, np.asarray(moduli, dtype=np.int64)[..., :, None])


@dataclass(frozen=True, eq=False)
class ActionMatrix:
    """Endomorphism of Z/d_1 + ... + Z/d_k acting on column vectors; entry (i, j) lives mod d_i."""
    matrix: np.ndarray
    moduli: tuple

    def __post_init__(self):
        reduced = _reduce_rows(self.matrix, self.moduli)
        reduced.setflags(write=False)
        object.__setattr__(self, "matrix", reduced)
        object.__setattr__(self, "moduli", tuple(int(d) for d in self.moduli))

    @classmethod
    def identity(cls, moduli: Sequence[int]) -> "ActionMatrix":
        return cls(np.eye(len(moduli), dtype=np.int64), tuple(moduli))

    def apply(self, vectors) -> np.ndarray:
        """Apply to a vector or to a stack of vectors along the last axis."""
        vectors = np.asarray(vectors, dtype=np.int64)
        return np.mod(vectors @ self.matrix.T, np.array(self.moduli, dtype=np.int64))

    def compose(self, other: "ActionMatrix") -> "ActionMatrix":
        """self after other."""
        return ActionMatrix(self.matrix @ other.matrix, self.moduli)

    def is_identity(self) -> bool:
        return self == ActionMatrix.identity(self.moduli)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ActionMatrix)
            and self.moduli == other.moduli
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.moduli, self.matrix.tobytes()))

    def to_json(self) -> dict:
        return {"moduli": list(self.moduli), "matrix": self.matrix.tolist()}


@dataclass(frozen=True, eq=False)
class ModuleAction:
    """x -> matrix of n -> n^x for every element x of H (a right action)."""
    H: FiniteGroup
    moduli: tuple
    matrices: np.ndarray

    def __post_init__(self):
        reduced = _reduce_rows(self.matrices, self.moduli)
        reduced.setflags(write=False)
        object.__setattr__(self, "matrices", reduced)
        object.__setattr__(self, "moduli", tuple(int(d) for d in self.moduli))

    @classmethod
    def trivial(cls, H: FiniteGroup, moduli: Sequence[int]) -> "ModuleAction":
        k = len(moduli)
        return cls(H, tuple(moduli), np.broadcast_to(np.eye(k, dtype=np.int64), (H.order, k, k)))

    def __getitem__(self, x: int) -> ActionMatrix:
        return ActionMatrix(self.matrices[x], self.moduli)

    def __len__(self) -> int:
        return self.H.order

    def is_trivial(self) -> bool:
        k = len(self.moduli)
        return bool((self.matrices == np.eye(k, dtype=np.int64)).all())

    def is_homomorphism(self) -> bool:
        """A(xy) = A(y) A(x) for all pairs, the right-action law n^(xy) = (n^x)^y."""
        products = np.einsum("yij,xjk->xyik", self.matrices, self.matrices)
        products = _reduce_rows(products, self.moduli)
        return bool(np.array_equal(self.matrices[self.H.table], products))

    def twisted(self, phi: GroupAutomorphism) -> "ModuleAction":
        """x -> A(phi(x))"""
        return ModuleAction(self.H, self.moduli, self.matrices[list(phi.image)])

    def key(self) -> bytes:
        return self.matrices.tobytes()


def restrict_to_matrix(theta: GroupAutomorphism, s: AbelianStructure) -> ActionMatrix:
    """Matrix of an automorphism of N (given on N's local numbering) in the coordinates of s."""
    if theta.group is not s.source.as_group:
        raise BadParameters("theta must be an automorphism of the structure's subgroup")
    columns = [s.coords[theta.image[s.local_from_coords(s.unit(j))]] for j in range(s.rank)]
    matrix = np.array(columns, dtype=np.int64).T.reshape(s.rank, s.rank)
    result = ActionMatrix(matrix, s.invariant_factors)
    if not np.array_equal(result.apply(s.coords), s.coords[list(theta.image)]):
        raise BadParameters("theta is not additive in the given coordinates")
    return result


def permutation_matrix(permutation: Sequence[int], s: AbelianStructure) -> ActionMatrix:
    """Matrix of an additive permutation of N's local indices."""
    return restrict_to_matrix(GroupAutomorphism(s.source.as_group, tuple(permutation)), s)


def conjugation_action(
    G: FiniteGroup,
    s: AbelianStructure,
    transversal: Sequence[int],
    H: FiniteGroup,
) -> ModuleAction:
    """Matrices of n -> t(x)^-1 n t(x) for every x in H."""
    members = s.source.array
    k = s.rank
    matrices = np.zeros((H.order, k, k), dtype=np.int64)
    for x, t in enumerate(transversal):
        conjugated = G.table[G.table[G.inverse[t], members], t]
        permutation = np.searchsorted(members, conjugated)
        matrices[x] = permutation_matrix(permutation.tolist(), s).matrix
    return ModuleAction(H, s.invariant_factors, matrices)
