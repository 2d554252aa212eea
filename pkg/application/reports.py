from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1.0"


class Report(BaseModel):
    """Base of every JSON document the CLI prints."""
    schema_version: str = SCHEMA_VERSION

    @property
    def verdict(self) -> Optional[bool]:
        return None


class ErrorDetail(BaseModel):
    type: str
    message: str


class ErrorReport(Report):
    error: ErrorDetail


class GroupSummary(BaseModel):
    name: str
    order: int
    exponent: int
    abelian: bool
    center_order: int
    derived_order: int
    nilpotency_class: Optional[int]
    element_orders: Dict[str, int]


class SubgroupSummary(BaseModel):
    members: List[int]
    order: int
    moduli: List[int]
    central: bool


class CatalogReport(Report):
    group: GroupSummary
    abelian_normal_subgroups: List[SubgroupSummary]


class ExtensionSummary(BaseModel):
    group: str
    order: int
    subgroup: List[int]
    quotient_order: int
    moduli: List[int]
    transversal: List[int]
    central: bool
    mu: Dict[str, Any]


class H2Report(Report):
    group: str
    moduli: List[int]
    action: str
    h2_order: int
    z2_order: int
    b2_order: int
    z1_order: int


class ExactnessSummary(BaseModel):
    seq_1_1: bool
    seq_1_2: bool
    seq_1_3: Optional[bool]
    wells_sequence: bool
    z1_matches: bool
    coprime_shortcut: Optional[bool]
    orders: Dict[str, int]
    violations: List[str]


class AnalyzeReport(Report):
    extension: ExtensionSummary
    c1_order: int
    c2_order: int
    c_order: int
    h2_order: int
    z1_order: int
    coprime: bool
    extendable: List[int]
    liftable: List[int]
    obstructions: Dict[str, Dict[str, Any]]
    exactness: ExactnessSummary

    @property
    def verdict(self) -> Optional[bool]:
        return not self.exactness.violations


class LiftReport(Report):
    command: str
    extension: ExtensionSummary
    theta: Optional[List[int]] = None
    phi: Optional[List[int]] = None
    succeeded: bool
    coprime: bool
    witness: Optional[List[int]]
    obstruction: Optional[Dict[str, Any]]

    @property
    def verdict(self) -> Optional[bool]:
        return self.succeeded


class SylowEntry(BaseModel):
    p: int
    P_order: int
    local_lift: bool
    obstruction: Optional[Dict[str, Any]]


class SylowReductionReport(Report):
    extension: ExtensionSummary
    mode: str
    target: List[int]
    verdict_local: bool
    global_result: Optional[bool]
    consistent: bool
    witness: Optional[List[int]]
    sylow_reduction: List[SylowEntry]
    index_kill: Optional[List[Dict[str, Any]]] = None
    corollaries: Optional[Dict[str, Any]] = None

    @property
    def verdict(self) -> Optional[bool]:
        return self.verdict_local


class SectionSummary(BaseModel):
    sequence: int
    domain_order: int
    images: List[Dict[str, Any]]


class FormSummary(BaseModel):
    prime: int
    form_preserving_order: int
    orthogonal_order: int
    c2_star_preserves_form: bool


class SplitReport(Report):
    extension: ExtensionSummary
    extension_splits: bool
    complement: Optional[List[int]]
    seq_4_1_splits: Optional[bool]
    seq_4_2_splits: Optional[bool]
    seq_4_3_splits: Optional[bool]
    sequences_coincide: bool
    orders: Dict[str, int]
    exact: Dict[str, Optional[bool]]
    sections: Dict[str, Optional[SectionSummary]]
    commutator_form: Optional[FormSummary] = None

    @property
    def verdict(self) -> Optional[bool]:
        return all(v is not False for v in self.exact.values())


class VerifyReport(Report):
    extension: ExtensionSummary
    exactness: ExactnessSummary
    derivation: Dict[str, Any]
    transversal: Dict[str, Any]
    passed: bool

    @property
    def verdict(self) -> Optional[bool]:
        return self.passed


class CorpusEntry(BaseModel):
    file: str
    group: str
    subgroup: List[int]
    passed: Optional[bool]
    failures: List[str] = Field(default_factory=list)
    skipped: Optional[str] = None


class CorpusSummary(Report):
    entries: List[CorpusEntry]
    passed: int
    failed: int
    skipped: int

    @property
    def verdict(self) -> Optional[bool]:
        return self.failed == 0


REPORT_TYPES = [
    ErrorReport,
    CatalogReport,
    H2Report,
    AnalyzeReport,
    LiftReport,
    SylowReductionReport,
    SplitReport,
    VerifyReport,
    CorpusSummary,
]
