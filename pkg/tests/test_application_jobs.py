import json

import pytest
from unittest.mock import Mock
from pydantic import ValidationError
from pytest import raises

from application.jobs import (
    EXIT_BOUND,
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
    EXIT_OK,
    JobOptions,
    JobRunner,
    JobSpec,
    error_report,
)
from application.reports import CatalogReport, ErrorReport
from domain.bounds import Bounds
from domain.errors import NotAbelian
from infrastructure.group_repo import JsonGroupRepository
from infrastructure.settings import load_bounds


@pytest.fixture
def runner():
    return JobRunner(repository_factory=JsonGroupRepository, bounds_loader=load_bounds)


def test_h2_job(runner):
    spec = JobSpec(command="h2", group="catalog:V4", options=JobOptions(coeffs="catalog:Z2"))
    result = runner.run(spec)
    assert result.exit_code == EXIT_OK
    assert result.report.h2_order == 8


def test_negative_verdict_exits_one(runner):
    spec = JobSpec(command="extend", group="catalog:heisenberg(3)", subgroup="center", theta="inversion")
    result = runner.run(spec)
    assert result.exit_code == EXIT_NEGATIVE
    assert result.report.obstruction is not None


def test_verify_job_passes(runner):
    result = runner.run(JobSpec(command="verify", group="catalog:dihedral(8)", subgroup="center"))
    assert result.exit_code == EXIT_OK
    assert result.report.passed


def test_catalog_job_has_no_verdict(runner):
    result = runner.run(JobSpec(command="catalog", group="catalog:Q8"))
    assert result.exit_code == EXIT_OK
    assert isinstance(result.report, CatalogReport)


def test_missing_file_is_an_input_error(runner, tmp_path):
    result = runner.run(JobSpec(command="catalog", group=str(tmp_path / "missing.json")))
    assert result.exit_code == EXIT_INPUT_ERROR
    assert isinstance(result.report, ErrorReport)
    assert result.report.error.type == "FileNotFoundError"


def test_order_above_bound_exits_three(runner):
    spec = JobSpec(command="catalog", group="catalog:dihedral(8)", options=JobOptions(max_order=4))
    result = runner.run(spec)
    assert result.exit_code == EXIT_BOUND
    assert result.report.error.type == "BoundExceeded"


def test_oversized_catalog_expression_exits_three(runner):
    spec = JobSpec(command="catalog", group="catalog:cyclic(3000)", options=JobOptions(max_order=16))
    result = runner.run(spec)
    assert result.exit_code == EXIT_BOUND
    assert result.report.error.type == "BoundExceeded"


@pytest.mark.parametrize("payload", [{"elements": [0, 1]}, 5])
def test_malformed_subgroup_file_is_an_input_error(runner, tmp_path, payload):
    path = tmp_path / "subgroup.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    result = runner.run(JobSpec(command="analyze", group="catalog:dihedral(8)", subgroup=str(path)))
    assert result.exit_code == EXIT_INPUT_ERROR
    assert result.report.error.type == "CorpusEntryError"
    assert "subgroup.json" in result.report.error.message


@pytest.mark.parametrize("spec, flag", [
    (JobSpec(command="extend", group="catalog:Z4", subgroup="center"), "--theta"),
    (JobSpec(command="lift", group="catalog:Z4", subgroup="center"), "--phi"),
    (JobSpec(command="h2", group="catalog:Z4"), "--coeffs"),
    (JobSpec(command="analyze", group="catalog:Z4"), "--subgroup"),
    (JobSpec(command="verify-all"), "DIRECTORY"),
])
def test_missing_arguments(runner, spec, flag):
    result = runner.run(spec)
    assert result.exit_code == EXIT_INPUT_ERROR
    assert flag in result.report.error.message


def test_sylow_needs_an_automorphism(runner):
    result = runner.run(JobSpec(command="sylow", group="catalog:Z4", subgroup="center"))
    assert result.exit_code == EXIT_INPUT_ERROR


def test_non_abelian_subgroup_is_an_input_error(runner):
    result = runner.run(JobSpec(command="analyze", group="catalog:S3", subgroup="whole"))
    assert result.exit_code == EXIT_INPUT_ERROR
    assert result.report.error.type == "NotAbelian"


def test_unknown_command_is_rejected():
    with raises(ValidationError):
        JobSpec(command="frobnicate")
    with raises(ValidationError):
        JobOptions(seed=-1)


def test_bounds_loader_receives_overrides():
    loader = Mock(return_value=Bounds())
    runner = JobRunner(repository_factory=JsonGroupRepository, bounds_loader=loader)
    runner.run(JobSpec(command="catalog", group="catalog:Z4", options=JobOptions(seed=5, max_order=100)))
    loader.assert_called_once_with(None, max_order=100, seed=5)


def test_missing_config_file(runner, tmp_path):
    options = JobOptions(config_path=str(tmp_path / "bounds.json"))
    result = runner.run(JobSpec(command="catalog", group="catalog:Z4", options=options))
    assert result.exit_code == EXIT_INPUT_ERROR


def test_verify_all_on_an_empty_directory(runner, tmp_path):
    result = runner.run(JobSpec(command="verify-all", directory=str(tmp_path)))
    assert result.exit_code == EXIT_OK
    assert result.report.entries == []


def test_error_report_names_the_exception():
    report = error_report(NotAbelian(1, 2))
    assert report.error.type == "NotAbelian"
    assert "1 and 2" in report.error.message
    assert report.schema_version == "1.0"
