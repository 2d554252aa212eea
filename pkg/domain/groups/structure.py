from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import isprime, primefactors

from domain.errors import BadParameters, NotNormal
from domain.groups.finite_group import FiniteGroup, GroupHomomorphism, Subgroup


def require_normal(N: Subgroup):
    witness = N.normality_witness()
    if witness is not None:
        raise NotNormal(*witness)


def quotient_group(G: FiniteGroup, N: Subgroup) -> Tuple[FiniteGroup, GroupHomomorphism]:
    """G/N with cosets numbered by their minimal member."""
    require_normal(N)
    coset_min = G.table[:, N.array].min(axis=1)
    representatives = np.unique(coset_min)
    pi = np.searchsorted(representatives, coset_min)
    table = pi[G.table[np.ix_(representatives, representatives)]]
    H = FiniteGroup(table=table, name=f"{G.name}/{N.order}")
    return H, GroupHomomorphism(G, H, tuple(int(x) for x in pi))


def commutator_table(G: FiniteGroup) -> np.ndarray:
    """C[a, b] = a^-1 b^-1 a b"""
    inv = G.inverse
    return G.table[G.table[inv[:, None], inv[None, :]], G.table]


def center(G: FiniteGroup) -> Subgroup:
    mask = (G.table == G.table.T).all(axis=1)
    return Subgroup(G, np.flatnonzero(mask).tolist())


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    return G.generated_subgroup(np.unique(commutator_table(G)).tolist())


def center_and_derived(G: FiniteGroup) -> Tuple[Subgroup, Subgroup]:
    return center(G), derived_subgroup(G)


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def _is_power_of(k: int, p: int) -> bool:
    return p_part(k, p) == k


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """First Sylow p-subgroup reached by adjoining p-elements in index order."""
    if not isprime(p):
        raise BadParameters(f"{p} is not prime")
    target = p_part(G.order, p)
    orders = G.element_orders
    generators: List[int] = []
    members = (0,)
    while len(members) < target:
        member_set = set(members)
        for x in range(G.order):
            if x in member_set or not _is_power_of(int(orders[x]), p):
                continue
            candidate = G.closure(generators + [x])
            if _is_power_of(len(candidate), p):
                generators.append(x)
                members = candidate
                break
    return Subgroup(G, members)


def conjugate_subgroups(S: Subgroup) -> List[Subgroup]:
    """All distinct conjugates of S, ordered by member sequence."""
    seen: Dict[tuple, Subgroup] = {}
    for g in range(S.parent.order):
        conjugate = S.conjugate(g)
        seen.setdefault(conjugate.members, conjugate)
    return [seen[key] for key in sorted(seen)]


def upper_central_series(G: FiniteGroup) -> List[Subgroup]:
    commutators = commutator_table(G)
    series = [G.trivial_subgroup()]
    while True:
        mask = series[-1].mask[commutators].all(axis=1)
        if int(mask.sum()) == series[-1].order:
            return series
        series.append(Subgroup(G, np.flatnonzero(mask).tolist()))


def nilpotency_class(G: FiniteGroup) -> Optional[int]:
    series = upper_central_series(G)
    if series[-1].order != G.order:
        return None
    return len(series) - 1


def is_nilpotent(G: FiniteGroup) -> bool:
    return nilpotency_class(G) is not None


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    indices = np.arange(G.order)
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        members = np.unique(G.table[G.table[indices, x], G.inverse])
        seen[members] = True
        classes.append(tuple(int(m) for m in members))
    return classes


def normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Every normal subgroup, as joins of normal closures of conjugacy classes."""
    closures = {G.closure(cls) for cls in conjugacy_classes(G)}
    found = set(closures) | {(0,)}
    frontier = list(found)
    while frontier:
        fresh = []
        for A in frontier:
            for B in closures:
                product = np.unique(G.table[np.ix_(A, B)])
                key = tuple(int(x) for x in product)
                if key not in found:
                    found.add(key)
                    fresh.append(key)
        frontier = fresh
    return [Subgroup(G, members) for members in sorted(found, key=lambda m: (len(m), m))]


def abelian_normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    return [N for N in normal_subgroups(G) if N.is_abelian()]


def is_characteristic_under(S: Subgroup, automorphisms) -> bool:
    return all(a.preserves(S) for a in automorphisms)


def prime_divisors(n: int) -> List[int]:
    return list(primefactors(n))


def fingerprint(G: FiniteGroup) -> dict:
    """Order/exponent style invariants used to label groups in reports."""
    Z, D = center_and_derived(G)
    statistics = Counter(int(o) for o in G.element_orders)
    return {
        "order": G.order,
        "exponent": G.exponent,
        "abelian": G.is_abelian(),
        "center_order": Z.order,
        "derived_order": D.order,
        "nilpotency_class": nilpotency_class(G),
        "element_orders": {str(k): statistics[k] for k in sorted(statistics)},
    }
