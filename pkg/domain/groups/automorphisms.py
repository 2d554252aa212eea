from collections import deque
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.errors import BadParameters, BoundExceeded
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism


def extend_injective_homomorphism(
    mapping: Mapping[Hashable, Hashable],
    generators: Sequence[Hashable],
    images: Sequence[Hashable],
    source_mul: Callable,
    target_mul: Callable,
) -> Optional[Dict]:
    """Grow ``mapping`` to the subgroup generated by its keys and ``generators``.

    Returns None as soon as the assignment is inconsistent with a
    homomorphism or stops being injective.
    """
    mapping = dict(mapping)
    reverse = {v: k for k, v in mapping.items()}
    for g, h in zip(generators, images):
        if mapping.get(g, h) != h or reverse.get(h, g) != g:
            return None
        mapping[g] = h
        reverse[h] = g
    queue = deque(mapping)
    while queue:
        a = queue.popleft()
        fa = mapping[a]
        for g, h in zip(generators, images):
            b = source_mul(a, g)
            fb = target_mul(fa, h)
            known = mapping.get(b)
            if known is None:
                if fb in reverse:
                    return None
                mapping[b] = fb
                reverse[fb] = b
                queue.append(b)
            elif known != fb:
                return None
    return mapping


def generating_set(group: FiniteGroup) -> Tuple[int, ...]:
    """Greedy generators: repeatedly adjoin an element of largest order outside the span."""
    orders = group.element_orders
    generators: List[int] = []
    span = {0}
    while len(span) < group.order:
        outside = [x for x in range(group.order) if x not in span]
        best = max(outside, key=lambda x: (int(orders[x]), -x))
        generators.append(best)
        span = set(group.closure(generators))
    return tuple(generators)


@lru_cache(maxsize=64)
def automorphism_group(group: FiniteGroup, bounds: Bounds = DEFAULT_BOUNDS) -> Tuple[GroupAutomorphism, ...]:
    """Aut(group), sorted by image sequence."""
    if group.order > bounds.max_order:
        raise BoundExceeded(
            f"|G| = {group.order} exceeds the automorphism enumeration bound {bounds.max_order}"
        )
    n = group.order
    generators = generating_set(group)
    orders = group.element_orders.tolist()
    candidates = [[y for y in range(n) if orders[y] == orders[g]] for g in generators]
    rows = group.rows

    def mul(a, b):
        return rows[a][b]

    found: List[tuple] = []

    def search(depth: int, mapping: Dict[int, int], chosen: List[int]):
        if depth == len(generators):
            found.append(tuple(mapping[x] for x in range(n)))
            if len(found) > bounds.max_automorphisms:
                raise BoundExceeded(
                    f"|Aut| exceeds the configured bound {bounds.max_automorphisms}"
                )
            return
        for y in candidates[depth]:
            extended = extend_injective_homomorphism(
                mapping, generators[: depth + 1], chosen + [y], mul, mul
            )
            if extended is not None:
                search(depth + 1, extended, chosen + [y])

    search(0, {0: 0}, [])
    return tuple(GroupAutomorphism.checked(group, image) for image in sorted(found))


def automorphism_from_generator_images(group: FiniteGroup, assignment: Mapping[int, int]) -> GroupAutomorphism:
    """The automorphism sending each key of ``assignment`` to its value."""
    generators = list(assignment)
    if len(group.closure(generators)) != group.order:
        raise BadParameters("The given elements do not generate the group")
    rows = group.rows

    def mul(a, b):
        return rows[a][b]

    mapping = extend_injective_homomorphism(
        {0: 0}, generators, [assignment[g] for g in generators], mul, mul
    )
    if mapping is None or len(mapping) != group.order:
        raise BadParameters("Generator images do not extend to an automorphism")
    return GroupAutomorphism.checked(group, [mapping[x] for x in range(group.order)])


def inner_automorphism(group: FiniteGroup, g: int) -> GroupAutomorphism:
    """x -> g x g^-1"""
    image = group.table[group.table[g], group.inverse[g]]
    return GroupAutomorphism(group, tuple(int(y) for y in image))


def inner_automorphisms(group: FiniteGroup) -> List[GroupAutomorphism]:
    distinct = {inner_automorphism(group, g).image for g in range(group.order)}
    return [GroupAutomorphism(group, image) for image in sorted(distinct)]


def is_commuting_automorphism(group: FiniteGroup, a: GroupAutomorphism) -> bool:
    x = np.arange(group.order)
    image = np.array(a.image)
    return bool(np.array_equal(group.table[x, image], group.table[image, x]))


def inversion(group: FiniteGroup) -> GroupAutomorphism:
    if not group.is_abelian():
        raise BadParameters("Inversion is an automorphism only of abelian groups")
    return GroupAutomorphism(group, tuple(int(y) for y in group.inverse))


def power_map(group: FiniteGroup, r: int) -> GroupAutomorphism:
    """x -> x^r on an abelian group."""
    if not group.is_abelian():
        raise BadParameters("Power maps are automorphisms only of abelian groups")
    if np.gcd(r, group.exponent) != 1:
        raise BadParameters(f"x -> x^{r} is not injective on a group of exponent {group.exponent}")
    return GroupAutomorphism(group, tuple(group.power(x, r) for x in range(group.order)))


def is_closed_under_composition(elements, compose: Callable) -> bool:
    """True when the finite set ``elements`` (containing the identity) is a group.

    Checks E * g inside E for a greedy generating set g drawn from E.
    """
    pool = set(elements)
    if not pool:
        return False
    generators = element_generators(list(elements), compose)
    return all(compose(e, g) in pool for e in pool for g in generators)


def _span(generators, compose: Callable) -> set:
    seen = set(generators)
    queue = deque(generators)
    while queue:
        a = queue.popleft()
        for g in generators:
            b = compose(a, g)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def element_generators(elements, compose: Callable) -> list:
    """Greedy generating set of a finite group given as a list of elements."""
    generators, span = [], set()
    for e in elements:
        if e not in span:
            generators.append(e)
            span = _span(generators, compose)
    return generators
