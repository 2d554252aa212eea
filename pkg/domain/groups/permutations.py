from collections import deque
from typing import Sequence

import numpy as np

from domain.errors import BadParameters, ClosureBoundExceeded
from domain.groups.finite_group import FiniteGroup


def _check_permutation(perm: Sequence[int], degree: int) -> tuple:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(degree)):
        raise BadParameters(f"{list(perm)} is not a permutation of 0..{degree - 1}")
    return perm


def group_from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    name: str = "",
    closure_bound: int = 20000,
) -> FiniteGroup:
    """Cayley table of the permutation group generated by ``generators``.

    Elements are numbered in breadth-first discovery order from the identity.
    The product p*q applies p first, then q.
    """
    if degree < 1:
        raise BadParameters("Permutation degree must be positive")
    generators = [_check_permutation(g, degree) for g in generators]

    identity = tuple(range(degree))
    index = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for g in generators:
            q = tuple(g[i] for i in p)
            if q not in index:
                if len(elements) >= closure_bound:
                    raise ClosureBoundExceeded(
                        f"Permutation closure exceeds {closure_bound} elements"
                    )
                index[q] = len(elements)
                elements.append(q)
                queue.append(q)

    perms = np.array(elements, dtype=np.int64)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        products = perms[:, perms[i]]
        table[i] = [index[tuple(row)] for row in products.tolist()]
    labels = tuple(" ".join(map(str, p)) for p in elements)
    return FiniteGroup(table=table, name=name, element_labels=labels)
