from typing import Callable, Dict, Optional, Sequence

import numpy as np
from sympy import isprime

from domain.errors import BadParameters, BoundExceeded, UnknownName
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism
from domain.groups.permutations import group_from_permutations


def _require_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise BadParameters(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise BadParameters(f"{name} must be at least {minimum}, got {value}")
    return int(value)


def _require_prime(p) -> int:
    p = _require_int(p, "p", 2)
    if not isprime(p):
        raise BadParameters(f"{p} is not prime")
    return p


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def cyclic(n) -> FiniteGroup:
    n = _require_int(n, "n", 1)
    a = np.arange(n)
    return FiniteGroup(table=(a[:, None] + a[None, :]) % n, name=f"cyclic({n})")


def dihedral(n) -> FiniteGroup:
    """Dihedral group of order n; element r^i s^j has index i + (n/2) j."""
    n = _require_int(n, "n", 2)
    if n % 2:
        raise BadParameters(f"dihedral order must be even, got {n}")
    m = n // 2
    idx = np.arange(n)
    i, j = idx % m, idx // m
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % m
    ref = (j[:, None] + j[None, :]) % 2
    return FiniteGroup(table=rot + m * ref, name=f"dihedral({n})")


def generalized_quaternion(n) -> FiniteGroup:
    """<a, b | a^(n/2) = 1, b^2 = a^(n/4), b^-1 a b = a^-1>, index i + (n/2) j for a^i b^j."""
    n = _require_int(n, "n", 8)
    if not _is_power_of_two(n):
        raise BadParameters(f"generalized quaternion order must be a power of 2, got {n}")
    half = n // 2
    idx = np.arange(n)
    i, j = idx % half, idx // half
    sign = np.where(j == 1, -1, 1)
    rot = i[:, None] + sign[:, None] * i[None, :]
    ref = j[:, None] + j[None, :]
    rot = (rot + np.where(ref == 2, half // 2, 0)) % half
    return FiniteGroup(table=rot + half * (ref % 2), name=f"generalized_quaternion({n})")


def elementary_abelian(p, k) -> FiniteGroup:
    p = _require_prime(p)
    k = _require_int(k, "k", 1)
    n = p ** k
    idx = np.arange(n)
    table = np.zeros((n, n), dtype=np.int64)
    for t in range(k):
        digit = (idx // p ** t) % p
        table += ((digit[:, None] + digit[None, :]) % p) * p ** t
    return FiniteGroup(table=table, name=f"elementary_abelian({p},{k})")


def heisenberg_mod_p(p) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p; (a, b, c) has index a + p b + p^2 c."""
    p = _require_prime(p)
    idx = np.arange(p ** 3)
    a, b, c = idx % p, (idx // p) % p, idx // (p * p)
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    return FiniteGroup(table=na + p * nb + p * p * nc, name=f"heisenberg_mod_p({p})")


def _extraspecial(n, minus: bool) -> FiniteGroup:
    n = _require_int(n, "n", 1)
    dim = 2 * n
    size = 2 ** dim
    v = np.arange(size)
    bits = (v[:, None] >> np.arange(dim)[None, :]) & 1
    x, y = bits[:, 0::2], bits[:, 1::2]
    beta = x @ y.T
    if minus:
        beta = beta + np.outer(x[:, -1], x[:, -1]) + np.outer(y[:, -1], y[:, -1])
    beta %= 2

    idx = np.arange(2 * size)
    vec, centre = idx % size, idx // size
    product_vec = vec[:, None] ^ vec[None, :]
    product_centre = (centre[:, None] + centre[None, :] + beta[np.ix_(vec, vec)]) % 2
    sign = "minus" if minus else "plus"
    return FiniteGroup(table=product_vec + size * product_centre, name=f"extraspecial_{sign}({n})")


def extraspecial_plus(n) -> FiniteGroup:
    """Central product of n copies of D8, order 2^(2n+1)."""
    return _extraspecial(n, minus=False)


def extraspecial_minus(n) -> FiniteGroup:
    """Central product of n-1 copies of D8 and one Q8, order 2^(2n+1)."""
    return _extraspecial(n, minus=True)


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """(a, b) has index a + |first| b."""
    if not isinstance(first, FiniteGroup) or not isinstance(second, FiniteGroup):
        raise BadParameters("direct_product takes two groups")
    n = first.order
    a, b = np.arange(n * second.order) % n, np.arange(n * second.order) // n
    table = first.table[np.ix_(a, a)] + n * second.table[np.ix_(b, b)]
    return FiniteGroup(table=table, name=f"{first.name} x {second.name}")


def semidirect_product(
    normal: FiniteGroup,
    complement: FiniteGroup,
    action: Sequence[Sequence[int]],
) -> FiniteGroup:
    """normal x| complement, where action[k] is the image sequence of the
    automorphism of ``normal`` by which k acts. (n, k) has index n + |normal| k.
    """
    if len(action) != complement.order:
        raise BadParameters("action must give one automorphism per complement element")
    autos = [GroupAutomorphism.checked(normal, images) for images in action]
    for k1 in range(complement.order):
        for k2 in range(complement.order):
            if autos[complement.mul(k1, k2)] != autos[k1].compose(autos[k2]):
                raise BadParameters(f"action is not a homomorphism at ({k1}, {k2})")

    m = normal.order
    acts = np.array([a.image for a in autos], dtype=np.int64)
    idx = np.arange(m * complement.order)
    n_part, k_part = idx % m, idx // m
    twisted = acts[k_part[:, None], n_part[None, :]]
    new_n = normal.table[n_part[:, None], twisted]
    new_k = complement.table[np.ix_(k_part, k_part)]
    return FiniteGroup(table=new_n + m * new_k, name=f"{normal.name} x| {complement.name}")


def power_action(normal_order, complement_order, r) -> list:
    """Action of a cyclic complement on a cyclic normal factor, generator acting by x -> r x."""
    m = _require_int(normal_order, "normal order", 1)
    c = _require_int(complement_order, "complement order", 1)
    r = int(r) % m if m > 1 else 0
    if m > 1 and (np.gcd(r, m) != 1 or pow(r, c, m) != 1 % m):
        raise BadParameters(f"x -> {r}x does not define an action of cyclic({c}) on cyclic({m})")
    return [[(pow(r, j, m) * x) % m for x in range(m)] for j in range(c)]


def symmetric(n) -> FiniteGroup:
    n = _require_int(n, "n", 1)
    cycle = [(i + 1) % n for i in range(n)]
    swap = [1, 0] + list(range(2, n)) if n > 1 else [0]
    return group_from_permutations(n, [cycle, swap], name=f"symmetric({n})")


def alternating(n) -> FiniteGroup:
    n = _require_int(n, "n", 1)
    generators = []
    for i in range(2, n):
        perm = list(range(n))
        perm[0], perm[1], perm[i] = 1, i, 0
        generators.append(perm)
    return group_from_permutations(n, generators, name=f"alternating({n})")


def capped_power(base: int, exponent: int, cap: int) -> int:
    """base ** exponent, or some value above ``cap`` once the power passes it."""
    if base <= 1:
        return base
    result = 1
    for _ in range(exponent):
        result *= base
        if result > cap:
            break
    return result


def _capped_factorial(n: int, cap: int) -> int:
    result = 1
    for k in range(2, n + 1):
        result *= k
        if result > cap:
            break
    return result


def _given_order(cap: int, n: int) -> int:
    return n


def _elementary_abelian_order(cap: int, p: int, k: int) -> int:
    return capped_power(p, k, cap)


def _heisenberg_order(cap: int, p: int) -> int:
    return capped_power(p, 3, cap)


def _extraspecial_order(cap: int, n: int) -> int:
    return capped_power(2, 2 * n + 1, cap)


def _symmetric_order(cap: int, n: int) -> int:
    return _capped_factorial(n, cap)


def _alternating_order(cap: int, n: int) -> int:
    return _capped_factorial(n, 2 * cap + 2) // 2 if n > 1 else 1


# order of each integer-parameter family, computed without building it
ORDER_RULES: Dict[str, Callable[..., int]] = {
    "cyclic": _given_order,
    "dihedral": _given_order,
    "generalized_quaternion": _given_order,
    "elementary_abelian": _elementary_abelian_order,
    "heisenberg_mod_p": _heisenberg_order,
    "extraspecial_plus": _extraspecial_order,
    "extraspecial_minus": _extraspecial_order,
    "symmetric": _symmetric_order,
    "alternating": _alternating_order,
}


def declared_order(name: str, parameters: Sequence, cap: int) -> Optional[int]:
    """Order of ``name(*parameters)``, exact up to ``cap``; None when the parameters are not plain integers."""
    rule = ORDER_RULES.get(name)
    if rule is None or not all(isinstance(p, (int, np.integer)) and not isinstance(p, bool) for p in parameters):
        return None
    try:
        return rule(cap, *(int(p) for p in parameters))
    except TypeError:
        return None


class GroupFactory:
    FAMILIES: Dict[str, Callable[..., FiniteGroup]] = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "generalized_quaternion": generalized_quaternion,
        "elementary_abelian": elementary_abelian,
        "heisenberg_mod_p": heisenberg_mod_p,
        "extraspecial_plus": extraspecial_plus,
        "extraspecial_minus": extraspecial_minus,
        "direct_product": direct_product,
        "semidirect_product": semidirect_product,
        "symmetric": symmetric,
        "alternating": alternating,
    }

    @staticmethod
    def create(name: str, *parameters, max_order: Optional[int] = None) -> FiniteGroup:
        family = GroupFactory.FAMILIES.get(name)
        if family is None:
            raise UnknownName(f"Unknown group family: {name}")
        if max_order is not None:
            order = declared_order(name, parameters, max_order)
            if order is not None and order > max_order:
                raise BoundExceeded(f"{name}{tuple(parameters)} has order above max_order {max_order}")
        try:
            return family(*parameters)
        except TypeError as exc:
            raise BadParameters(f"{name}: {exc}") from exc


def catalog(name: str, parameters: Sequence = ()) -> FiniteGroup:
    return GroupFactory.create(name, *parameters)
