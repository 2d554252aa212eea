from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from domain.cohomology.cohomology_group import class_eq, coboundary_solve
from domain.wells.aut_subgroups import aut_subgroups, tau
from domain.wells.compatible import compatible_pairs
from domain.wells.extension import ExtensionData, random_transversal
from domain.wells.lifting import extend_automorphism, lift_automorphism, lift_pair
from domain.wells.obstructions import (
    cohomology_for,
    h2_conjugation_action,
    lambda1,
    lambda2,
    lambda_pair,
    pair_cocycle,
)


@dataclass
class ExactnessReport:
    orders: Dict[str, int]
    seq_1_1: bool
    seq_1_2: bool
    seq_1_3: Optional[bool]
    wells_sequence: bool
    z1_matches: bool
    coprime_shortcut: Optional[bool]
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _images(autos) -> set:
    return {a.image for a in autos}


def _compare(violations: List[str], label: str, found: set, expected: set) -> bool:
    if found == expected:
        return True
    violations.append(
        f"{label}: {len(found - expected)} unexpected, {len(expected - found)} missing"
    )
    return False


def trivial_pairs(ext: ExtensionData) -> set:
    """Keys of the compatible pairs whose Wells class vanishes."""
    keys = set()
    for pair in compatible_pairs(ext).pairs:
        if coboundary_solve(pair_cocycle(ext, pair.theta, pair.phi), cohomology_for(ext, pair.phi)) is not None:
            keys.add(pair.key())
    return keys


def verify_exactness(ext: ExtensionData) -> ExactnessReport:
    """Elementwise kernel and image checks for the three Wells sequences and the full map on C."""
    subs = aut_subgroups(ext)
    pairs = compatible_pairs(ext)
    violations: List[str] = []
    upper_n_h = _images(subs.aut_upper_N_H)

    taus_n_h = [(a, tau(ext, a)) for a in subs.aut_N_H]
    kernel_1 = {a.image for a, p in taus_n_h if p.theta.is_identity()}
    image_1 = {p.theta.image for _, p in taus_n_h}
    c1_star = {theta.image for theta in pairs.c1 if lambda1(ext, theta).is_trivial()}
    seq_1_1 = all([
        _compare(violations, "kernel of tau_1", kernel_1, upper_n_h),
        _compare(violations, "image of tau_1", image_1, c1_star),
    ])

    taus_upper = [(a, tau(ext, a)) for a in subs.aut_upper_N]
    kernel_2 = {a.image for a, p in taus_upper if p.phi.is_identity()}
    image_2 = {p.phi.image for _, p in taus_upper}
    c2_star = {phi.image for phi in pairs.c2 if lambda2(ext, phi).is_trivial()}
    seq_1_2 = all([
        _compare(violations, "kernel of tau_2", kernel_2, upper_n_h),
        _compare(violations, "image of tau_2", image_2, c2_star),
    ])

    taus_all = [(a, tau(ext, a)) for a in subs.aut_N_of_G]
    kernel = {a.image for a, p in taus_all if p.theta.is_identity() and p.phi.is_identity()}
    image = {p.key() for _, p in taus_all}
    trivial = trivial_pairs(ext)
    wells_sequence = all([
        _compare(violations, "kernel of tau", kernel, upper_n_h),
        _compare(violations, "image of tau", image, trivial),
    ])

    seq_1_3 = None
    if ext.central:
        c_star = {p.key() for p in pairs.pairs if lambda_pair(ext, p.theta, p.phi).is_trivial()}
        seq_1_3 = _compare(violations, "image of tau (central)", image, c_star)

    z1_matches = len(upper_n_h) == ext.cohomology.z1_order
    if not z1_matches:
        violations.append(f"|Aut^(N,H)| = {len(upper_n_h)} but |Z^1| = {ext.cohomology.z1_order}")

    coprime_shortcut = None
    if ext.is_coprime():
        coprime_shortcut = len(c1_star) == len(pairs.c1) and len(c2_star) == len(pairs.c2)
        if not coprime_shortcut:
            violations.append("coprime orders but some obstruction is nontrivial")

    orders = dict(subs.orders())
    orders.update({
        "c": len(pairs.pairs),
        "c1": len(pairs.c1),
        "c2": len(pairs.c2),
        "c1_star": len(c1_star),
        "c2_star": len(c2_star),
        "z1": ext.cohomology.z1_order,
        "h2": ext.cohomology.h2_order,
    })
    return ExactnessReport(
        orders=orders,
        seq_1_1=seq_1_1,
        seq_1_2=seq_1_2,
        seq_1_3=seq_1_3,
        wells_sequence=wells_sequence,
        z1_matches=z1_matches,
        coprime_shortcut=coprime_shortcut,
        violations=violations,
    )


@dataclass
class DerivationReport:
    c1_pairs: int
    c2_pairs: int
    skipped: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def derivation_check(ext: ExtensionData) -> DerivationReport:
    """lambda1(a b) = lambda1(a) + a.lambda1(b) on C1, lambda2(b a) = lambda2(a) + lambda2(b)^a on C2."""
    pairs = compatible_pairs(ext)
    limit = ext.bounds.derivation_max
    report = DerivationReport(c1_pairs=0, c2_pairs=0)

    if len(pairs.c1) > limit:
        report.skipped.append(f"|C1| = {len(pairs.c1)} exceeds {limit}")
    else:
        classes = {a.image: lambda1(ext, a) for a in pairs.c1}
        for a in pairs.c1:
            for b in pairs.c1:
                lhs = lambda1(ext, a.compose(b))
                rhs = classes[a.image] + h2_conjugation_action(ext, a, classes[b.image])
                report.c1_pairs += 1
                if not class_eq(lhs, rhs):
                    report.failures.append(f"lambda1 at ({list(a.image)}, {list(b.image)})")

    if len(pairs.c2) > limit:
        report.skipped.append(f"|C2| = {len(pairs.c2)} exceeds {limit}")
    else:
        classes = {a.image: lambda2(ext, a) for a in pairs.c2}
        for a in pairs.c2:
            for b in pairs.c2:
                lhs = lambda2(ext, b.compose(a))
                rhs = classes[a.image] + h2_conjugation_action(ext, a, classes[b.image])
                report.c2_pairs += 1
                if not class_eq(lhs, rhs):
                    report.failures.append(f"lambda2 at ({list(a.image)}, {list(b.image)})")
    return report


@dataclass
class TransversalReport:
    draws: int
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _verdicts(ext: ExtensionData, c1, c2, central_pairs) -> Dict[str, bool]:
    verdicts = {}
    for theta in c1:
        verdicts[f"extend {list(theta.image)}"] = extend_automorphism(ext, theta).succeeded
    for phi in c2:
        verdicts[f"lift {list(phi.image)}"] = lift_automorphism(ext, phi).succeeded
    for pair in central_pairs:
        verdicts[f"pair {list(pair.theta.image)} {list(pair.phi.image)}"] = lift_pair(ext, pair.theta, pair.phi).succeeded
    return verdicts


def transversal_independence_check(
    ext: ExtensionData,
    draws: Optional[int] = None,
    seed: Optional[int] = None,
) -> TransversalReport:
    """Redraw the transversal and compare every extend and lift verdict with the original one."""
    bounds = ext.bounds
    draws = bounds.transversal_draws if draws is None else draws
    rng = np.random.default_rng(bounds.seed if seed is None else seed)
    pairs = compatible_pairs(ext)
    central_pairs = pairs.pairs if ext.central and len(pairs.pairs) <= bounds.derivation_max else []
    baseline = _verdicts(ext, pairs.c1, pairs.c2, central_pairs)
    report = TransversalReport(draws=draws)
    for draw in range(draws):
        redrawn = random_transversal(ext, rng)
        verdicts = _verdicts(redrawn, pairs.c1, pairs.c2, central_pairs)
        for key, value in verdicts.items():
            if value != baseline[key]:
                report.mismatches.append(f"draw {draw}: {key} changed to {value}")
    return report
