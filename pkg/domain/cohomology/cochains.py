from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from domain.errors import BadParameters
from domain.groups.finite_group import FiniteGroup
from domain.modules.action_matrix import ModuleAction


def _reduced(values, moduli: tuple, shape: tuple) -> np.ndarray:
    array = np.array(values, dtype=np.int64).reshape(shape)
    if len(moduli):
        array = np.mod(array, np.array(moduli, dtype=np.int64))
    array.setflags(write=False)
    return array


def _require_same(first, second):
    if first.H is not second.H or first.moduli != second.moduli:
        raise BadParameters("Cochains live on different groups or coefficient modules")


@dataclass(frozen=True, eq=False)
class OneCochain:
    """H -> N in coordinates: ``values[x]`` is the vector of x, with values[1] = 0."""
    H: FiniteGroup
    moduli: tuple
    values: np.ndarray

    def __post_init__(self):
        moduli = tuple(int(d) for d in self.moduli)
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "values", _reduced(self.values, moduli, (self.H.order, len(moduli))))
        if self.values[0].any():
            raise BadParameters("A normalized 1-cochain vanishes at the identity")

    @classmethod
    def zero(cls, H: FiniteGroup, moduli) -> "OneCochain":
        return cls(H, tuple(moduli), np.zeros((H.order, len(moduli)), dtype=np.int64))

    @classmethod
    def from_unknowns(cls, H: FiniteGroup, moduli, vector) -> "OneCochain":
        """Inverse of ``unknowns``: values at the non-identity elements, flattened."""
        k = len(moduli)
        values = np.zeros((H.order, k), dtype=np.int64)
        values[1:] = np.array([int(v) for v in vector], dtype=np.int64).reshape(H.order - 1, k)
        return cls(H, tuple(moduli), values)

    def unknowns(self) -> np.ndarray:
        return self.values[1:].reshape(-1)

    def __add__(self, other: "OneCochain") -> "OneCochain":
        _require_same(self, other)
        return OneCochain(self.H, self.moduli, self.values + other.values)

    def __neg__(self) -> "OneCochain":
        return OneCochain(self.H, self.moduli, -self.values)

    def __sub__(self, other: "OneCochain") -> "OneCochain":
        return self + (-other)

    def scale(self, n: int) -> "OneCochain":
        return OneCochain(self.H, self.moduli, int(n) * self.values)

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OneCochain)
            and other.H is self.H
            and other.moduli == self.moduli
            and np.array_equal(other.values, self.values)
        )

    def __hash__(self) -> int:
        return hash((id(self.H), self.moduli, self.values.tobytes()))

    def to_json(self) -> dict:
        return {
            "moduli": list(self.moduli),
            "values": {str(x): row.tolist() for x, row in enumerate(self.values) if row.any()},
        }

    @classmethod
    def from_json(cls, H: FiniteGroup, data: dict) -> "OneCochain":
        moduli = tuple(data["moduli"])
        values = np.zeros((H.order, len(moduli)), dtype=np.int64)
        for key, vector in data.get("values", {}).items():
            values[int(key)] = vector
        return cls(H, moduli, values)


@dataclass(frozen=True, eq=False)
class TwoCochain:
    """H x H -> N in coordinates, vanishing whenever either argument is the identity."""
    H: FiniteGroup
    moduli: tuple
    values: np.ndarray

    def __post_init__(self):
        moduli = tuple(int(d) for d in self.moduli)
        n = self.H.order
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "values", _reduced(self.values, moduli, (n, n, len(moduli))))
        if self.values[0].any() or self.values[:, 0].any():
            raise BadParameters("A normalized 2-cochain vanishes when either argument is the identity")

    @classmethod
    def zero(cls, H: FiniteGroup, moduli) -> "TwoCochain":
        n = H.order
        return cls(H, tuple(moduli), np.zeros((n, n, len(moduli)), dtype=np.int64))

    @classmethod
    def from_unknowns(cls, H: FiniteGroup, moduli, vector) -> "TwoCochain":
        n, k = H.order, len(moduli)
        values = np.zeros((n, n, k), dtype=np.int64)
        values[1:, 1:] = np.array([int(v) for v in vector], dtype=np.int64).reshape(n - 1, n - 1, k)
        return cls(H, tuple(moduli), values)

    def unknowns(self) -> np.ndarray:
        return self.values[1:, 1:].reshape(-1)

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        _require_same(self, other)
        return TwoCochain(self.H, self.moduli, self.values + other.values)

    def __neg__(self) -> "TwoCochain":
        return TwoCochain(self.H, self.moduli, -self.values)

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return self + (-other)

    def scale(self, n: int) -> "TwoCochain":
        return TwoCochain(self.H, self.moduli, int(n) * self.values)

    def with_value(self, x: int, y: int, vector) -> "TwoCochain":
        values = self.values.copy()
        values[x, y] = vector
        return TwoCochain(self.H, self.moduli, values)

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoCochain)
            and other.H is self.H
            and other.moduli == self.moduli
            and np.array_equal(other.values, self.values)
        )

    def __hash__(self) -> int:
        return hash((id(self.H), self.moduli, self.values.tobytes()))

    def to_json(self) -> dict:
        n = self.H.order
        return {
            "moduli": list(self.moduli),
            "values": {
                f"{x},{y}": self.values[x, y].tolist()
                for x in range(n) for y in range(n)
                if self.values[x, y].any()
            },
        }

    @classmethod
    def from_json(cls, H: FiniteGroup, data: dict) -> "TwoCochain":
        moduli = tuple(data["moduli"])
        n = H.order
        values = np.zeros((n, n, len(moduli)), dtype=np.int64)
        for key, vector in data.get("values", {}).items():
            x, y = (int(part) for part in key.split(","))
            values[x, y] = vector
        return cls(H, moduli, values)


def _require_action(f, action: ModuleAction):
    if action.H is not f.H or action.moduli != f.moduli:
        raise BadParameters("The action does not match the cochain's group and coefficients")


def cocycle_defect(f: TwoCochain, action: ModuleAction) -> Optional[Tuple[int, int, int]]:
    """First (x, y, z) at which f(xy, z) + A(z) f(x, y) = f(x, yz) + f(y, z) fails."""
    _require_action(f, action)
    T = f.H.table
    v = f.values
    n = f.H.order
    lhs = v[T] + np.einsum("zij,xyj->xyzi", action.matrices, v)
    rhs = v[np.arange(n)[:, None, None], T[None, :, :]] + v[None, :, :, :]
    difference = np.mod(lhs - rhs, np.array(f.moduli, dtype=np.int64)) if f.moduli else lhs - rhs
    bad = np.argwhere(difference.any(axis=-1))
    if not len(bad):
        return None
    return tuple(int(i) for i in bad[0])


def is_two_cocycle(f: TwoCochain, action: ModuleAction) -> bool:
    return cocycle_defect(f, action) is None


def coboundary_of(chi: OneCochain, action: ModuleAction) -> TwoCochain:
    """(x, y) -> chi(xy) - A(y) chi(x) - chi(y)"""
    _require_action(chi, action)
    v = chi.values
    values = v[chi.H.table] - np.einsum("yij,xj->xyi", action.matrices, v) - v[None, :, :]
    return TwoCochain(chi.H, chi.moduli, values)
