"""Exact linear algebra over the integers and over sums of cyclic groups.

Smith forms come from sympy's DomainMatrix over ZZ and are handed back as
object arrays of Python ints. Generator arithmetic inside a finite abelian
group stays in int64 since every entry is reduced mod its modulus.
"""
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from sympy.core.intfunc import igcdex
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

from domain.errors import BoundExceeded


def exgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with g = s a + t b = gcd(a, b) >= 0."""
    s, t, g = igcdex(int(a), int(b))
    return int(g), int(s), int(t)


@dataclass(frozen=True, eq=False)
class SmithForm:
    """``left @ matrix @ right`` is diagonal with entries ``diagonal`` then zeros.

    ``left`` and ``right`` are unimodular object arrays; each diagonal entry
    divides the next.
    """
    shape: Tuple[int, int]
    left: np.ndarray
    right: np.ndarray
    diagonal: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def cokernel_torsion(self) -> int:
        """Product of the diagonal, the order of Z^rows / image when the rank is full."""
        product = 1
        for d in self.diagonal:
            product *= d
        return product

    def solve(self, rhs: Sequence[int]) -> Optional[np.ndarray]:
        """Integer z with ``matrix @ z == rhs``; free parameters are set to zero."""
        y = self.left @ np.array([int(v) for v in rhs], dtype=object)
        r = self.rank
        if any(y[i] != 0 for i in range(r, self.shape[0])):
            return None
        w = np.zeros(r, dtype=object)
        for i, d in enumerate(self.diagonal):
            if y[i] % d:
                return None
            w[i] = y[i] // d
        if r == 0:
            return np.zeros(self.shape[1], dtype=object)
        return self.right[:, :r] @ w


def _to_array(matrix) -> np.ndarray:
    rows, cols = matrix.shape
    return np.array([[int(v) for v in row] for row in matrix.to_list()], dtype=object).reshape(rows, cols)


def smith_normal_form(matrix) -> SmithForm:
    work = np.array(matrix, dtype=object)
    if work.ndim != 2:
        raise ValueError("smith_normal_form expects a 2-dimensional matrix")
    rows, cols = work.shape
    if not rows or not cols:
        return SmithForm((rows, cols), np.eye(rows, dtype=object), np.eye(cols, dtype=object), ())

    snf, left, right = smith_normal_decomp(DM([[int(v) for v in row] for row in work], ZZ))
    entries = snf.to_list()
    left = _to_array(left)
    diagonal = []
    for i in range(min(rows, cols)):
        d = int(entries[i][i])
        if d == 0:
            break
        if d < 0:
            left[i] = -left[i]
        diagonal.append(abs(d))
    return SmithForm(shape=(rows, cols), left=left, right=_to_array(right), diagonal=tuple(diagonal))


def _combine_pair(rows: np.ndarray, p: int, j: int, a: int, b: int, moduli: np.ndarray):
    """Replace rows p, j by unimodular combinations whose pivot entries become gcd(a, b), 0."""
    g, s, t = exgcd(a, b)
    row_p, row_j = rows[p].copy(), rows[j].copy()
    rows[p] = np.mod(s * row_p + t * row_j, moduli)
    rows[j] = np.mod(-(b // g) * row_p + (a // g) * row_j, moduli)
    return g


def kernel_generators(
    equations: Iterable[Tuple[Sequence[int], Sequence[int], int]],
    moduli: Sequence[int],
) -> np.ndarray:
    """Generators (as rows) of the subgroup of Z/m_1 + ... + Z/m_U cut out by ``equations``.

    Each equation ``(indices, coefficients, d)`` reads
    sum(coefficients * v[indices]) = 0 mod d and must be well defined on
    the group: coefficient * m_index is divisible by d.
    """
    moduli = np.asarray(moduli, dtype=np.int64)
    generators = np.eye(len(moduli), dtype=np.int64)
    generators = generators[moduli > 1]
    for indices, coefficients, d in equations:
        if not len(generators):
            break
        values = np.mod(generators[:, list(indices)] @ np.asarray(coefficients, dtype=np.int64), d)
        nonzero = np.flatnonzero(values)
        if not len(nonzero):
            continue
        p = int(nonzero[0])
        for j in nonzero[1:]:
            values[p] = _combine_pair(generators, p, int(j), int(values[p]), int(values[j]), moduli)
            values[j] = 0
        generators[p] = np.mod(generators[p] * (d // gcd(int(values[p]), d)), moduli)
        generators = generators[generators.any(axis=1)]
    return generators


def subgroup_order(generators, moduli: Sequence[int]) -> int:
    """Order of the subgroup of Z/m_1 + ... + Z/m_U spanned by the rows of ``generators``."""
    moduli = np.asarray(moduli, dtype=np.int64)
    if not len(moduli):
        return 1
    e = int(np.lcm.reduce(moduli))
    scale = e // moduli
    work = np.mod(np.asarray(generators, dtype=np.int64).reshape(-1, len(moduli)) * scale, e)
    common = np.full(len(moduli), e, dtype=np.int64)
    order = 1
    for column in range(len(moduli)):
        work = work[work.any(axis=1)]
        if not len(work):
            break
        nonzero = np.flatnonzero(work[:, column])
        if not len(nonzero):
            continue
        p = int(nonzero[0])
        for j in nonzero[1:]:
            work[p, column] = _combine_pair(work, p, int(j), int(work[p, column]), int(work[j, column]), common)
        g = gcd(int(work[p, column]), e)
        order *= e // g
        extra = np.mod(work[p] * (e // g), e)
        work = np.delete(work, p, axis=0)
        if extra.any():
            work = np.vstack([work, extra])
    return order


def enumerate_span(generators, moduli: Sequence[int], limit: int) -> list:
    """Every element of the span of ``generators``, as tuples, in breadth-first order."""
    moduli = np.asarray(moduli, dtype=np.int64)
    if not len(moduli):
        return [()]
    generators = [np.asarray(g, dtype=np.int64) for g in np.asarray(generators).reshape(-1, len(moduli))]
    zero = tuple([0] * len(moduli))
    seen = {zero}
    ordered = [zero]
    frontier = [np.zeros(len(moduli), dtype=np.int64)]
    while frontier:
        fresh = []
        for v in frontier:
            for g in generators:
                w = np.mod(v + g, moduli)
                key = tuple(int(x) for x in w)
                if key not in seen:
                    if len(seen) >= limit:
                        raise BoundExceeded(f"span exceeds {limit} elements")
                    seen.add(key)
                    ordered.append(key)
                    fresh.append(w)
        frontier = fresh
    return ordered
