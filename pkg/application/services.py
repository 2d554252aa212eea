from abc import ABC, abstractmethod
from typing import List, Optional

from application.reports import (
    AnalyzeReport,
    CatalogReport,
    ExactnessSummary,
    ExtensionSummary,
    FormSummary,
    GroupSummary,
    H2Report,
    LiftReport,
    Report,
    SectionSummary,
    SplitReport,
    SylowEntry,
    SylowReductionReport,
    SubgroupSummary,
    VerifyReport,
)
from application.specifiers import parse_automorphism
from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.cohomology.cohomology_group import cohomology_group
from domain.errors import BadParameters, BoundExceeded, NotExtraspecialShape
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism, Subgroup
from domain.groups.structure import abelian_normal_subgroups, center, fingerprint
from domain.modules.abelian_structure import abelian_structure
from domain.modules.action_matrix import ModuleAction
from domain.reduction.sylow_reduction import (
    corollary_predicates,
    index_kill_check,
    sylow_extend_check,
    sylow_lift_check,
)
from domain.splitting.commutator_form import (
    commutator_form,
    form_preserving_group,
    is_form_preserving,
    orthogonal_group,
)
from domain.splitting.kernels import split_kernels
from domain.splitting.sections import canonical_sections, is_split_extension, section_search
from domain.wells.compatible import compatible_pairs
from domain.wells.exactness import (
    ExactnessReport,
    derivation_check,
    transversal_independence_check,
    verify_exactness,
)
from domain.wells.extension import ExtensionData, extension_from
from domain.wells.lifting import (
    LiftResult,
    extend_automorphism,
    lift_automorphism,
    lift_compatible_pair,
    lift_pair,
)
from infrastructure.logger import log_method_call


# Repository interfaces for Application Layer
class GroupRepositoryInterface(ABC):
    @abstractmethod
    def load_group(self, source: str) -> FiniteGroup:
        """Load a group from a JSON file or a ``catalog:<expr>`` source."""
        pass

    @abstractmethod
    def resolve_subgroup(self, group: FiniteGroup, spec: str) -> Subgroup:
        """Turn a subgroup specifier into a subgroup of ``group``."""
        pass

    @abstractmethod
    def list_corpus(self, directory: str) -> List[str]:
        """Group files of a corpus directory in a deterministic order."""
        pass


class ReportRendererInterface(ABC):
    @abstractmethod
    def render(self, report: Report) -> bytes:
        """Serialize a report."""
        pass


def extension_summary(ext: ExtensionData) -> ExtensionSummary:
    return ExtensionSummary(**ext.to_json())


def exactness_summary(report: ExactnessReport) -> ExactnessSummary:
    return ExactnessSummary(
        seq_1_1=report.seq_1_1,
        seq_1_2=report.seq_1_2,
        seq_1_3=report.seq_1_3,
        wells_sequence=report.wells_sequence,
        z1_matches=report.z1_matches,
        coprime_shortcut=report.coprime_shortcut,
        orders=report.orders,
        violations=report.violations,
    )


def group_summary(group: FiniteGroup) -> GroupSummary:
    return GroupSummary(name=group.name, **fingerprint(group))


class AnalysisService:
    """One method per CLI command; each returns a pydantic report."""

    def __init__(self, group_repo: GroupRepositoryInterface, bounds: Bounds = DEFAULT_BOUNDS):
        self.group_repo = group_repo
        self.bounds = bounds

    def _extension(self, group_source: str, subgroup_spec: str) -> ExtensionData:
        G = self.group_repo.load_group(group_source)
        N = self.group_repo.resolve_subgroup(G, subgroup_spec)
        return extension_from(G, N, self.bounds)

    def _lift_report(self, command: str, ext: ExtensionData, result: LiftResult,
                     theta: Optional[GroupAutomorphism] = None,
                     phi: Optional[GroupAutomorphism] = None) -> LiftReport:
        return LiftReport(
            command=command,
            extension=extension_summary(ext),
            theta=list(theta.image) if theta is not None else None,
            phi=list(phi.image) if phi is not None else None,
            **result.to_json(),
        )

    @log_method_call()
    def catalog(self, group_source: str) -> CatalogReport:
        G = self.group_repo.load_group(group_source)
        Z = center(G)
        subgroups = []
        for N in abelian_normal_subgroups(G):
            coeffs = abelian_structure(N)
            subgroups.append(SubgroupSummary(
                members=list(N.members),
                order=N.order,
                moduli=list(coeffs.invariant_factors),
                central=N.is_subgroup_of(Z),
            ))
        return CatalogReport(group=group_summary(G), abelian_normal_subgroups=subgroups)

    @log_method_call()
    def h2(self, group_source: str, coeffs_source: str, action: str = "trivial") -> H2Report:
        if action != "trivial":
            raise BadParameters(f"Only the trivial action is supported for explicit coefficients, got {action!r}")
        H = self.group_repo.load_group(group_source)
        C = self.group_repo.load_group(coeffs_source)
        coeffs = abelian_structure(C.whole())
        cg = cohomology_group(H, coeffs, ModuleAction.trivial(H, coeffs.invariant_factors), self.bounds)
        return H2Report(
            group=H.name,
            moduli=list(coeffs.invariant_factors),
            action=action,
            h2_order=cg.h2_order,
            z2_order=cg.z2_order,
            b2_order=cg.b2_order,
            z1_order=cg.z1_order,
        )

    @log_method_call()
    def analyze(self, group_source: str, subgroup_spec: str) -> AnalyzeReport:
        ext = self._extension(group_source, subgroup_spec)
        pairs = compatible_pairs(ext)
        extendable, liftable = [], []
        obstructions = {"c1": {}, "c2": {}}
        for i, theta in enumerate(pairs.c1):
            result = extend_automorphism(ext, theta)
            if result.succeeded:
                extendable.append(i)
            else:
                obstructions["c1"][str(i)] = result.obstruction.representative.to_json()
        for i, phi in enumerate(pairs.c2):
            result = lift_automorphism(ext, phi)
            if result.succeeded:
                liftable.append(i)
            else:
                obstructions["c2"][str(i)] = result.obstruction.representative.to_json()
        return AnalyzeReport(
            extension=extension_summary(ext),
            c1_order=len(pairs.c1),
            c2_order=len(pairs.c2),
            c_order=len(pairs.pairs),
            h2_order=ext.cohomology.h2_order,
            z1_order=ext.cohomology.z1_order,
            coprime=ext.is_coprime(),
            extendable=extendable,
            liftable=liftable,
            obstructions=obstructions,
            exactness=exactness_summary(verify_exactness(ext)),
        )

    @log_method_call()
    def extend(self, group_source: str, subgroup_spec: str, theta_spec: str) -> LiftReport:
        ext = self._extension(group_source, subgroup_spec)
        theta = parse_automorphism(theta_spec, ext.N_group, self.bounds)
        return self._lift_report("extend", ext, extend_automorphism(ext, theta), theta=theta)

    @log_method_call()
    def lift(self, group_source: str, subgroup_spec: str, phi_spec: str) -> LiftReport:
        ext = self._extension(group_source, subgroup_spec)
        phi = parse_automorphism(phi_spec, ext.H, self.bounds)
        return self._lift_report("lift", ext, lift_automorphism(ext, phi), phi=phi)

    @log_method_call()
    def lift_pair(self, group_source: str, subgroup_spec: str, theta_spec: str, phi_spec: str) -> LiftReport:
        """Central extensions take any pair; otherwise the pair must be compatible."""
        ext = self._extension(group_source, subgroup_spec)
        theta = parse_automorphism(theta_spec, ext.N_group, self.bounds)
        phi = parse_automorphism(phi_spec, ext.H, self.bounds)
        if ext.central:
            result = lift_pair(ext, theta, phi)
        else:
            result = lift_compatible_pair(ext, theta, phi)
        return self._lift_report("lift-pair", ext, result, theta=theta, phi=phi)

    @log_method_call()
    def sylow(self, group_source: str, subgroup_spec: str,
              phi_spec: Optional[str] = None, theta_spec: Optional[str] = None) -> SylowReductionReport:
        """Lift phi through invariant Sylow preimages, or extend theta when only theta is given."""
        ext = self._extension(group_source, subgroup_spec)
        if phi_spec is None and theta_spec is not None:
            theta = parse_automorphism(theta_spec, ext.N_group, self.bounds)
            check = sylow_extend_check(ext, theta)
            mode, target, index_kill, corollaries = "extend", theta, None, None
        else:
            phi = parse_automorphism(phi_spec, ext.H, self.bounds)
            theta = parse_automorphism(theta_spec, ext.N_group, self.bounds) if theta_spec else None
            check = sylow_lift_check(ext, phi)
            mode, target = "lift", phi
            index_kill = index_kill_check(ext, phi, check).entries
            corollaries = corollary_predicates(ext, phi, theta).to_json()
        global_result = check.global_result
        return SylowReductionReport(
            extension=extension_summary(ext),
            mode=mode,
            target=list(target.image),
            verdict_local=check.verdict,
            global_result=global_result.succeeded if global_result is not None else None,
            consistent=check.consistent,
            witness=list(check.witness.image) if check.witness is not None else None,
            sylow_reduction=[SylowEntry(**r.to_json()) for r in check.reports],
            index_kill=index_kill,
            corollaries=corollaries,
        )

    @log_method_call()
    def split(self, group_source: str, subgroup_spec: str, search: bool = True) -> SplitReport:
        ext = self._extension(group_source, subgroup_spec)
        witness = is_split_extension(ext)
        kernels = split_kernels(ext)
        sections = {"seq_4_1": None, "seq_4_2": None, "seq_4_3": None}
        verdicts = {"seq_4_1": None, "seq_4_2": None, "seq_4_3": None}
        if witness.splits:
            found = canonical_sections(ext)
            for key, section in zip(sections, found):
                if section is not None:
                    sections[key] = SectionSummary(**section.to_json())
                    verdicts[key] = True
        elif search:
            for which, key in enumerate(sections, start=1):
                if which == 3 and not ext.central:
                    continue
                try:
                    section = section_search(ext, which, kernels)
                except BoundExceeded:
                    continue
                verdicts[key] = section is not None
                if section is not None:
                    sections[key] = SectionSummary(**section.to_json())
        return SplitReport(
            extension=extension_summary(ext),
            extension_splits=witness.splits,
            complement=list(witness.complement.members) if witness.splits else None,
            seq_4_1_splits=verdicts["seq_4_1"],
            seq_4_2_splits=verdicts["seq_4_2"],
            seq_4_3_splits=verdicts["seq_4_3"],
            sequences_coincide=kernels.sequences_coincide,
            orders=kernels.orders,
            exact=kernels.exact,
            sections=sections,
            commutator_form=self._form_summary(ext, kernels.c2_star),
        )

    def _form_summary(self, ext: ExtensionData, c2_star: List[GroupAutomorphism]) -> Optional[FormSummary]:
        try:
            form = commutator_form(ext)
        except NotExtraspecialShape:
            return None
        preserving = [phi for phi in c2_star if is_form_preserving(ext, phi, form)]
        return FormSummary(
            prime=form.p,
            form_preserving_order=len(form_preserving_group(ext)),
            orthogonal_order=len(orthogonal_group(ext)),
            c2_star_preserves_form=len(preserving) == len(c2_star),
        )

    @log_method_call()
    def verify(self, group_source: str, subgroup_spec: str) -> VerifyReport:
        ext = self._extension(group_source, subgroup_spec)
        return self.verify_extension(ext)

    def verify_extension(self, ext: ExtensionData) -> VerifyReport:
        exactness = verify_exactness(ext)
        derivation = derivation_check(ext)
        transversal = transversal_independence_check(ext)
        return VerifyReport(
            extension=extension_summary(ext),
            exactness=exactness_summary(exactness),
            derivation={
                "c1_pairs": derivation.c1_pairs,
                "c2_pairs": derivation.c2_pairs,
                "skipped": derivation.skipped,
                "failures": derivation.failures,
                "passed": derivation.passed,
            },
            transversal={
                "draws": transversal.draws,
                "mismatches": transversal.mismatches,
                "passed": transversal.passed,
            },
            passed=exactness.passed and derivation.passed and transversal.passed,
        )
