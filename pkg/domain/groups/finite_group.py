from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from domain.errors import (
    BadParameters,
    MalformedTable,
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
)

IDENTITY = 0


def _frozen(array) -> np.ndarray:
    array = np.array(array, dtype=np.int64, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table over the indices 0..n-1.

    Index 0 is always the identity. Instances compare by identity: two tables
    describing isomorphic groups are still different objects.
    """
    table: np.ndarray
    name: str = ""
    element_labels: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return IDENTITY

    @cached_property
    def inverse(self) -> np.ndarray:
        return _frozen(np.argmax(self.table == IDENTITY, axis=1))

    @cached_property
    def rows(self) -> tuple:
        return tuple(tuple(row) for row in self.table.tolist())

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        indices = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        power = indices.copy()
        step = 1
        while (orders == 0).any():
            orders[(power == IDENTITY) & (orders == 0)] = step
            power = self.table[power, indices]
            step += 1
        return _frozen(orders)

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, x: int, k: int) -> int:
        k %= int(self.element_orders[x])
        result, base = IDENTITY, x
        while k:
            if k & 1:
                result = self.rows[result][base]
            base = self.rows[base][base]
            k >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return self.rows[self.rows[g][x]][self.inv(g)]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b"""
        rows = self.rows
        return rows[rows[self.inv(a)][self.inv(b)]][rows[a][b]]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def closure(self, generators: Iterable[int]) -> tuple:
        generators = [int(g) for g in generators if int(g) != IDENTITY]
        seen = {IDENTITY}
        queue = deque([IDENTITY])
        rows = self.rows
        while queue:
            a = queue.popleft()
            row = rows[a]
            for g in generators:
                b = row[g]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return tuple(sorted(seen))

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(members))

    def generated_subgroup(self, generators: Iterable[int]) -> "Subgroup":
        return Subgroup(self, self.closure(generators))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (IDENTITY,))

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def label(self, x: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[x]
        return str(x)

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"


class Subgroup:
    """A subgroup of ``parent`` stored as its sorted member indices."""

    def __init__(self, parent: FiniteGroup, members: Sequence[int]):
        members = tuple(sorted({int(m) for m in members}))
        self.parent = parent
        self.members = members
        self._validate()

    def _validate(self):
        n = self.parent.order
        if not self.members or self.members[0] != IDENTITY:
            raise BadParameters("Subgroup must contain the identity")
        if self.members[-1] >= n:
            raise BadParameters(f"Subgroup member {self.members[-1]} out of range")
        if n % len(self.members):
            raise BadParameters(
                f"Subgroup of size {len(self.members)} cannot divide group order {n}"
            )
        block = self.parent.table[np.ix_(self.array, self.array)]
        if not self.mask[block].all():
            raise BadParameters("Subgroup members are not closed under multiplication")

    @cached_property
    def array(self) -> np.ndarray:
        return _frozen(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask[g])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        return self.abelian_witness() is None

    def abelian_witness(self) -> Optional[tuple]:
        block = self.parent.table[np.ix_(self.array, self.array)]
        bad = np.argwhere(block != block.T)
        if len(bad) == 0:
            return None
        i, j = bad[0]
        return self.members[i], self.members[j]

    def normality_witness(self) -> Optional[tuple]:
        """Return (g, n) with g n g^-1 outside the subgroup, or None when normal."""
        table, inverse = self.parent.table, self.parent.inverse
        for g in range(self.parent.order):
            conjugates = table[table[g, self.array], inverse[g]]
            outside = np.flatnonzero(~self.mask[conjugates])
            if len(outside):
                return g, self.members[outside[0]]
        return None

    def is_normal(self) -> bool:
        return self.normality_witness() is None

    def local_index(self, g: int) -> int:
        return int(np.searchsorted(self.array, g))

    def conjugate(self, g: int) -> "Subgroup":
        table, inverse = self.parent.table, self.parent.inverse
        return Subgroup(self.parent, table[table[g, self.array], inverse[g]].tolist())

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.array].all())

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a group in its own right, local index i <-> members[i]."""
        block = self.parent.table[np.ix_(self.array, self.array)]
        labels = tuple(self.parent.label(m) for m in self.members)
        return FiniteGroup(
            table=np.searchsorted(self.array, block),
            name=f"{self.parent.name}[{self.order}]",
            element_labels=labels,
        )


@dataclass(frozen=True)
class GroupHomomorphism:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_homomorphism(self) -> bool:
        image = np.array(self.image)
        lhs = image[self.source.table]
        rhs = self.target.table[np.ix_(image, image)]
        return bool(image[IDENTITY] == IDENTITY and np.array_equal(lhs, rhs))

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, [x for x, y in enumerate(self.image) if y == IDENTITY])


@dataclass(frozen=True)
class GroupAutomorphism:
    group: FiniteGroup
    image: tuple

    @classmethod
    def checked(cls, group: FiniteGroup, image: Sequence[int]) -> "GroupAutomorphism":
        image = tuple(int(y) for y in image)
        if sorted(image) != list(range(group.order)):
            raise BadParameters("Automorphism image is not a permutation of the group")
        candidate = cls(group, image)
        if not GroupHomomorphism(group, group, image).is_homomorphism():
            raise BadParameters("Map does not respect the group multiplication")
        return candidate

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupAutomorphism":
        return cls(group, tuple(range(group.order)))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """self after other."""
        image = self.image
        return GroupAutomorphism(self.group, tuple(image[y] for y in other.image))

    def inverse(self) -> "GroupAutomorphism":
        result = [0] * len(self.image)
        for x, y in enumerate(self.image):
            result[y] = x
        return GroupAutomorphism(self.group, tuple(result))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def order(self) -> int:
        current, k = self, 1
        while not current.is_identity():
            current = current.compose(self)
            k += 1
        return k

    def preserves(self, subgroup: Subgroup) -> bool:
        return {self.image[m] for m in subgroup.members} == subgroup.member_set

    def restrict(self, subgroup: Subgroup) -> "GroupAutomorphism":
        """Restriction to an invariant subgroup, as an automorphism of subgroup.as_group."""
        if not self.preserves(subgroup):
            raise BadParameters("Automorphism does not leave the subgroup invariant")
        return GroupAutomorphism(
            subgroup.as_group,
            tuple(subgroup.local_index(self.image[m]) for m in subgroup.members),
        )

    def as_homomorphism(self) -> GroupHomomorphism:
        return GroupHomomorphism(self.group, self.group, self.image)


def _relabel_identity(table: np.ndarray, identity: int) -> np.ndarray:
    swap = np.arange(table.shape[0])
    swap[0], swap[identity] = identity, 0
    return swap[table[np.ix_(swap, swap)]]


def _check_associative(table: np.ndarray, full_max: int, seed: int):
    n = table.shape[0]
    if n <= full_max:
        for a in range(n):
            left = table[table[a]]
            right = table[a][table]
            bad = np.argwhere(left != right)
            if len(bad):
                b, c = bad[0]
                raise NotAssociative(a, int(b), int(c))
        return
    rng = np.random.default_rng(seed)
    remaining = 10 * n * n
    while remaining:
        size = min(remaining, 1_000_000)
        a, b, c = rng.integers(0, n, size=(3, size))
        bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
        if len(bad):
            i = bad[0]
            raise NotAssociative(int(a[i]), int(b[i]), int(c[i]))
        remaining -= size


def group_from_cayley(
    table,
    name: str = "",
    element_labels: Optional[Sequence[str]] = None,
    full_associativity_max: int = 512,
    seed: int = 0,
) -> FiniteGroup:
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"Cayley table is not an integer matrix: {exc}") from exc
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedTable(f"Cayley table must be a non-empty square matrix, got shape {array.shape}")
    n = array.shape[0]
    if array.min() < 0 or array.max() >= n:
        raise MalformedTable(f"Cayley table entries must lie in 0..{n - 1}")

    indices = np.arange(n)
    for r in range(n):
        if not np.array_equal(np.sort(array[r]), indices):
            raise NotLatinSquare("row", r)
    for c in range(n):
        if not np.array_equal(np.sort(array[:, c]), indices):
            raise NotLatinSquare("column", c)

    identities = [
        e for e in range(n)
        if np.array_equal(array[e], indices) and np.array_equal(array[:, e], indices)
    ]
    if not identities:
        raise NoIdentity()
    identity = identities[0]
    labels = list(element_labels) if element_labels is not None else None
    if identity != IDENTITY:
        array = _relabel_identity(array, identity)
        if labels is not None:
            labels[0], labels[identity] = labels[identity], labels[0]

    _check_associative(array, full_associativity_max, seed)
    return FiniteGroup(
        table=array,
        name=name,
        element_labels=tuple(labels) if labels is not None else None,
    )
