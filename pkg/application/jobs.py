import json
import logging
from typing import Callable, Literal, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, conint

from application.reports import ErrorDetail, ErrorReport, Report
from application.services import AnalysisService, GroupRepositoryInterface
from application.verification import CorpusVerificationService
from domain.bounds import Bounds
from domain.errors import BadParameters, BoundError, ExtliftError
from infrastructure.logger import extlift_logger

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_BOUND = 3

Command = Literal[
    "analyze", "h2", "extend", "lift", "lift-pair", "sylow", "split", "verify", "catalog", "verify-all",
]


class JobOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: Optional[conint(ge=0)] = None
    max_order: Optional[conint(ge=1)] = None
    config_path: Optional[str] = None
    coeffs: Optional[str] = None
    action: str = "trivial"
    search: bool = True


class JobSpec(BaseModel):
    """One CLI invocation: a command, its group/subgroup sources and automorphism specifiers."""
    model_config = ConfigDict(extra="forbid")

    command: Command
    group: Optional[str] = None
    subgroup: Optional[str] = None
    theta: Optional[str] = None
    phi: Optional[str] = None
    directory: Optional[str] = None
    options: JobOptions = JobOptions()


class JobResult(NamedTuple):
    exit_code: int
    report: Report


def _require(value: Optional[str], flag: str) -> str:
    if value is None:
        raise BadParameters(f"{flag} is required for this command")
    return value


def error_report(exc: BaseException) -> ErrorReport:
    if isinstance(exc, ValidationError):
        message = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
    else:
        message = str(exc)
    return ErrorReport(error=ErrorDetail(type=type(exc).__name__, message=message))


class JobRunner:
    """Resolves bounds, dispatches a JobSpec to the services and maps outcomes to exit codes."""

    def __init__(
        self,
        repository_factory: Callable[[Bounds], GroupRepositoryInterface],
        bounds_loader: Callable[..., Bounds],
    ):
        self.repository_factory = repository_factory
        self.bounds_loader = bounds_loader
        self.logger = extlift_logger

    def _dispatch(self, spec: JobSpec, bounds: Bounds) -> Report:
        repo = self.repository_factory(bounds)
        if spec.command == "verify-all":
            return CorpusVerificationService(repo, bounds).verify_all(_require(spec.directory, "DIRECTORY"))
        service = AnalysisService(repo, bounds)
        group = _require(spec.group, "--group")
        if spec.command == "catalog":
            return service.catalog(group)
        if spec.command == "h2":
            return service.h2(group, _require(spec.options.coeffs, "--coeffs"), spec.options.action)
        subgroup = _require(spec.subgroup, "--subgroup")
        if spec.command == "analyze":
            return service.analyze(group, subgroup)
        if spec.command == "extend":
            return service.extend(group, subgroup, _require(spec.theta, "--theta"))
        if spec.command == "lift":
            return service.lift(group, subgroup, _require(spec.phi, "--phi"))
        if spec.command == "lift-pair":
            return service.lift_pair(group, subgroup, _require(spec.theta, "--theta"), _require(spec.phi, "--phi"))
        if spec.command == "sylow":
            if spec.phi is None and spec.theta is None:
                raise BadParameters("--phi or --theta is required for this command")
            return service.sylow(group, subgroup, spec.phi, spec.theta)
        if spec.command == "split":
            return service.split(group, subgroup, spec.options.search)
        return service.verify(group, subgroup)

    def run(self, spec: JobSpec) -> JobResult:
        job_id = self.logger.new_job()
        self.logger.log_job(spec.command, spec.model_dump(exclude_none=True), job_id)
        try:
            bounds = self.bounds_loader(
                spec.options.config_path,
                max_order=spec.options.max_order,
                seed=spec.options.seed,
            )
            report = self._dispatch(spec, bounds)
        except BoundError as exc:
            self.logger.log_job(spec.command, {"outcome": "bound", "error": str(exc)}, job_id, logging.WARNING)
            return JobResult(EXIT_BOUND, error_report(exc))
        except (ExtliftError, ValidationError, FileNotFoundError, json.JSONDecodeError) as exc:
            self.logger.log_job(spec.command, {"outcome": "error", "error": str(exc)}, job_id, logging.ERROR)
            return JobResult(EXIT_INPUT_ERROR, error_report(exc))
        verdict = report.verdict
        exit_code = EXIT_NEGATIVE if verdict is False else EXIT_OK
        self.logger.log_job(spec.command, {"outcome": "done", "verdict": verdict, "exit_code": exit_code}, job_id)
        return JobResult(exit_code, report)
