from dataclasses import dataclass, field
from typing import Dict, List, Optional

from domain.groups.automorphisms import is_closed_under_composition
from domain.groups.finite_group import GroupAutomorphism
from domain.wells.aut_subgroups import aut_subgroups
from domain.wells.compatible import CompatiblePair, compatible_pairs
from domain.wells.extension import ExtensionData
from domain.wells.obstructions import lambda1, lambda2, lambda_pair


@dataclass
class SplitKernels:
    """C1*, C2* and (central extensions only) C*: the pairs with vanishing Wells class."""
    c1_star: List[GroupAutomorphism]
    c2_star: List[GroupAutomorphism]
    c_star: Optional[List[CompatiblePair]]
    orders: Dict[str, int] = field(default_factory=dict)
    exact: Dict[str, Optional[bool]] = field(default_factory=dict)
    sequences_coincide: bool = False


def _compose(a, b):
    return a.compose(b)


def split_kernels(ext: ExtensionData) -> SplitKernels:
    pairs = compatible_pairs(ext)
    c1_star = [theta for theta in pairs.c1 if lambda1(ext, theta).is_trivial()]
    c2_star = [phi for phi in pairs.c2 if lambda2(ext, phi).is_trivial()]
    c_star = None
    if ext.central:
        c_star = [p for p in pairs.pairs if lambda_pair(ext, p.theta, p.phi).is_trivial()]

    subs = aut_subgroups(ext)
    base = len(subs.aut_upper_N_H)
    exact = {
        "seq_4_1": len(subs.aut_N_H) == base * len(c1_star) and is_closed_under_composition(c1_star, _compose),
        "seq_4_2": len(subs.aut_upper_N) == base * len(c2_star) and is_closed_under_composition(c2_star, _compose),
        "seq_4_3": None,
    }
    if c_star is not None:
        exact["seq_4_3"] = len(subs.aut_N_of_G) == base * len(c_star) and is_closed_under_composition(c_star, _compose)
    orders = dict(subs.orders())
    orders.update({"c1_star": len(c1_star), "c2_star": len(c2_star)})
    if c_star is not None:
        orders["c_star"] = len(c_star)
    return SplitKernels(
        c1_star=c1_star,
        c2_star=c2_star,
        c_star=c_star,
        orders=orders,
        exact=exact,
        sequences_coincide=ext.central and len(pairs.c1) == 1,
    )
