from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from domain.cohomology.cochains import OneCochain
from domain.cohomology.cohomology_group import coboundary_solve
from domain.errors import BadParameters, BoundExceeded, NotCentral, NotSplit
from domain.groups.automorphisms import element_generators, extend_injective_homomorphism
from domain.groups.finite_group import GroupAutomorphism, Subgroup
from domain.splitting.kernels import SplitKernels, split_kernels
from domain.wells.aut_subgroups import aut_subgroups, tau
from domain.wells.compatible import CompatiblePair
from domain.wells.extension import ExtensionData, with_transversal
from domain.wells.triples import WellsTriple, automorphism_from_triple


@dataclass(frozen=True)
class SplitWitness:
    splits: bool
    transversal: Optional[tuple] = None
    complement: Optional[Subgroup] = None


def is_split_extension(ext: ExtensionData) -> SplitWitness:
    """mu = delta chi gives the homomorphic transversal x -> t(x) chi(x)."""
    chi = coboundary_solve(ext.mu, ext.cohomology)
    if chi is None:
        return SplitWitness(False)
    G = ext.G
    t = tuple(G.mul(ext.transversal[x], ext.element_of(chi.values[x])) for x in range(ext.H.order))
    image = np.array(t)
    if not np.array_equal(image[ext.H.table], G.table[np.ix_(image, image)]):
        raise ArithmeticError("Split transversal is not a homomorphism")
    complement = Subgroup(G, t)
    if len(complement.member_set & ext.N.member_set) != 1:
        raise ArithmeticError("Complement meets N nontrivially")
    return SplitWitness(True, t, complement)


@dataclass(frozen=True)
class Section:
    """A homomorphism from a starred set back into Aut(G), inverse to the projection."""
    which: int
    domain: tuple
    images: tuple

    def image_of(self, element) -> GroupAutomorphism:
        return dict(zip(self.domain, self.images))[element]

    def to_json(self) -> dict:
        return {
            "sequence": self.which,
            "domain_order": len(self.domain),
            "images": [
                {"element": _element_json(d), "automorphism": list(a.image)}
                for d, a in zip(self.domain, self.images)
            ],
        }


def _element_json(element):
    if isinstance(element, CompatiblePair):
        return {"theta": list(element.theta.image), "phi": list(element.phi.image)}
    return list(element.image)


def _projection(ext: ExtensionData, which: int) -> Callable:
    if which == 1:
        return lambda gamma: tau(ext, gamma).theta
    if which == 2:
        return lambda gamma: tau(ext, gamma).phi
    return lambda gamma: tau(ext, gamma)


def is_homomorphic_section(ext: ExtensionData, section: Section) -> bool:
    mapping = dict(zip(section.domain, section.images))
    project = _projection(ext, section.which)
    if any(project(mapping[d]) != d for d in section.domain):
        return False
    return all(
        mapping.get(a.compose(b)) == mapping[a].compose(mapping[b])
        for a in section.domain for b in section.domain
    )


def _starred(ext: ExtensionData, which: int, kernels: SplitKernels) -> list:
    if which == 1:
        return kernels.c1_star
    if which == 2:
        return kernels.c2_star
    if which == 3:
        if kernels.c_star is None:
            raise NotCentral("Sequence (4.3) is defined for central extensions only")
        return kernels.c_star
    raise BadParameters(f"Sequence must be 1, 2 or 3, got {which}")


def _identity(ext: ExtensionData, which: int):
    if which == 1:
        return GroupAutomorphism.identity(ext.N_group)
    if which == 2:
        return GroupAutomorphism.identity(ext.H)
    return CompatiblePair(GroupAutomorphism.identity(ext.N_group), GroupAutomorphism.identity(ext.H))


def canonical_sections(ext: ExtensionData) -> Tuple[Section, Section, Optional[Section]]:
    """gamma(h n) = h theta(n), gamma(h n) = phi(h) n and, when central, phi(h) theta(n) over a complement."""
    witness = is_split_extension(ext)
    if not witness.splits:
        raise NotSplit("The extension does not split")
    split = with_transversal(ext, witness.transversal)
    zero = OneCochain.zero(ext.H, ext.coeffs.invariant_factors)
    kernels = split_kernels(ext)
    id_n = GroupAutomorphism.identity(ext.N_group)
    id_h = GroupAutomorphism.identity(ext.H)

    def build(which: int, elements: list, to_pair: Callable) -> Section:
        images = []
        for element in elements:
            theta, phi = to_pair(element)
            images.append(automorphism_from_triple(split, WellsTriple(theta, phi, zero)))
        section = Section(which, tuple(elements), tuple(images))
        if not is_homomorphic_section(ext, section):
            raise ArithmeticError(f"Canonical section of sequence {which} is not a homomorphic section")
        return section

    psi1 = build(1, kernels.c1_star, lambda theta: (theta, id_h))
    psi2 = build(2, kernels.c2_star, lambda phi: (id_n, phi))
    psi = build(3, kernels.c_star, lambda pair: (pair.theta, pair.phi)) if ext.central else None
    return psi1, psi2, psi


def section_search(ext: ExtensionData, which: int, kernels: Optional[SplitKernels] = None) -> Optional[Section]:
    """Backtrack over images of a generating set of the starred group; None when no section exists."""
    kernels = kernels or split_kernels(ext)
    domain = _starred(ext, which, kernels)
    limit = ext.bounds.max_section_domain
    if len(domain) > limit:
        raise BoundExceeded(f"Starred set of order {len(domain)} exceeds the section search bound {limit}")

    subs = aut_subgroups(ext)
    source = {1: subs.aut_N_H, 2: subs.aut_upper_N, 3: subs.aut_N_of_G}[which]
    project = _projection(ext, which)
    fibers: Dict[object, List[GroupAutomorphism]] = {}
    for gamma in source:
        fibers.setdefault(project(gamma), []).append(gamma)

    identity = _identity(ext, which)
    generators = element_generators([identity] + [d for d in domain if d != identity], _compose)
    generators = [g for g in generators if g != identity]
    candidates = [[a for a in fibers.get(g, []) if a.order() == _order(g)] for g in generators]
    start = {identity: GroupAutomorphism.identity(ext.G)}

    def search(depth: int, chosen: List[GroupAutomorphism]) -> Optional[dict]:
        if depth == len(generators):
            mapping = extend_injective_homomorphism(start, generators, chosen, _compose, _compose)
            return mapping if mapping is not None and len(mapping) == len(domain) else None
        for candidate in candidates[depth]:
            partial = extend_injective_homomorphism(
                start, generators[: depth + 1], chosen + [candidate], _compose, _compose
            )
            if partial is None:
                continue
            found = search(depth + 1, chosen + [candidate])
            if found is not None:
                return found
        return None

    mapping = search(0, [])
    if mapping is None:
        return None
    ordered = sorted(mapping, key=_sort_key)
    section = Section(which, tuple(ordered), tuple(mapping[d] for d in ordered))
    if not is_homomorphic_section(ext, section):
        return None
    return section


def _compose(a, b):
    return a.compose(b)


def _order(element) -> int:
    current, k = element, 1
    while not _is_identity(current):
        current = current.compose(element)
        k += 1
    return k


def _is_identity(element) -> bool:
    if isinstance(element, CompatiblePair):
        return element.theta.is_identity() and element.phi.is_identity()
    return element.is_identity()


def _sort_key(element):
    if isinstance(element, CompatiblePair):
        return element.key()
    return element.image
