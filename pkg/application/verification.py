import os
from typing import List

from application.reports import CorpusEntry, CorpusSummary
from application.services import AnalysisService, GroupRepositoryInterface
from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.errors import BoundError, NotExtraspecialShape, NotSplit, SylowNotInvariant, TripleConditionsFail
from domain.groups.finite_group import FiniteGroup, Subgroup
from domain.groups.structure import abelian_normal_subgroups
from domain.reduction.sylow_reduction import index_kill_check, sylow_extend_check, sylow_lift_check
from domain.splitting.commutator_form import commutator_form, orthogonal_group
from domain.splitting.kernels import split_kernels
from domain.splitting.sections import canonical_sections, is_split_extension
from domain.wells.aut_subgroups import aut_subgroups
from domain.wells.compatible import compatible_pairs
from domain.wells.extension import ExtensionData, extension_from
from domain.wells.triples import automorphism_from_triple, valid_triples
from infrastructure.logger import extlift_logger, log_method_call


def sylow_failures(ext: ExtensionData) -> List[str]:
    """Local Sylow verdicts must agree with the global ones wherever they are defined."""
    failures = []
    pairs = compatible_pairs(ext)
    for phi in pairs.c2:
        try:
            check = sylow_lift_check(ext, phi)
        except SylowNotInvariant:
            continue
        if not check.consistent:
            failures.append(f"sylow lift disagrees for phi={list(phi.image)}")
        if not index_kill_check(ext, phi, check).passed:
            failures.append(f"index does not kill the obstruction of phi={list(phi.image)}")
    for theta in pairs.c1:
        if not sylow_extend_check(ext, theta).consistent:
            failures.append(f"sylow extend disagrees for theta={list(theta.image)}")
    return failures


def triple_failures(ext: ExtensionData) -> List[str]:
    """Valid triples must give back Aut_N(G) one to one; small groups only."""
    normalizing = aut_subgroups(ext).aut_N_of_G
    if len(normalizing) > ext.bounds.derivation_max:
        return []
    triples = valid_triples(ext)
    failures, images = [], set()
    for triple in triples:
        try:
            images.add(automorphism_from_triple(ext, triple).image)
        except TripleConditionsFail as exc:
            failures.append(f"valid triple rejected: {exc}")
    if len(images) != len(triples):
        failures.append(f"{len(triples)} triples give {len(images)} automorphisms")
    if images != {gamma.image for gamma in normalizing}:
        failures.append("automorphisms built from triples differ from Aut_N(G)")
    return failures


def splitting_failures(ext: ExtensionData) -> List[str]:
    failures = []
    kernels = split_kernels(ext)
    for key, value in kernels.exact.items():
        if value is False:
            failures.append(f"{key} is not exact")
    if is_split_extension(ext).splits:
        try:
            canonical_sections(ext)
        except (ArithmeticError, NotSplit) as exc:
            failures.append(f"canonical sections: {exc}")
    try:
        commutator_form(ext)
    except NotExtraspecialShape:
        return failures
    if len(orthogonal_group(ext)) != len(kernels.c2_star):
        failures.append("C2* differs in order from the orthogonal group of the commutator form")
    return failures


class CorpusVerificationService:
    """Runs every check on every abelian normal subgroup of every group in a corpus directory."""

    def __init__(self, group_repo: GroupRepositoryInterface, bounds: Bounds = DEFAULT_BOUNDS):
        self.group_repo = group_repo
        self.bounds = bounds
        self.analysis = AnalysisService(group_repo, bounds)
        self.logger = extlift_logger.get_component_logger("verification")

    def _verify_extension(self, path: str, G: FiniteGroup, N: Subgroup) -> CorpusEntry:
        entry = CorpusEntry(file=os.path.basename(path), group=G.name, subgroup=list(N.members), passed=None)
        try:
            ext = extension_from(G, N, self.bounds)
            report = self.analysis.verify_extension(ext)
            failures = list(report.exactness.violations)
            failures += report.derivation["failures"] + report.transversal["mismatches"]
            failures += sylow_failures(ext)
            failures += triple_failures(ext)
            failures += splitting_failures(ext)
        except BoundError as exc:
            entry.skipped = str(exc)
            self.logger.info(f"Skipped {G.name} over {list(N.members)}: {exc}")
            return entry
        entry.failures = failures
        entry.passed = not failures
        if failures:
            self.logger.warning(f"{G.name} over {list(N.members)}: {len(failures)} failures")
        return entry

    @log_method_call()
    def verify_all(self, directory: str) -> CorpusSummary:
        entries = []
        for path in self.group_repo.list_corpus(directory):
            try:
                G = self.group_repo.load_group(path)
            except BoundError as exc:
                name = os.path.basename(path)
                entries.append(CorpusEntry(file=name, group=name, subgroup=[], passed=None, skipped=str(exc)))
                self.logger.info(f"Skipped {name}: {exc}")
                continue
            for N in abelian_normal_subgroups(G):
                entries.append(self._verify_extension(path, G, N))
        return CorpusSummary(
            entries=entries,
            passed=sum(1 for e in entries if e.passed is True),
            failed=sum(1 for e in entries if e.passed is False),
            skipped=sum(1 for e in entries if e.passed is None),
        )
