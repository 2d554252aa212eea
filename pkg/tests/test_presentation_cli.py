import json

import pytest
from click.testing import CliRunner

from presentation.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def fast_config(tmp_path):
    path = tmp_path / "bounds.json"
    path.write_text(json.dumps({"transversal_draws": 2}), encoding="utf-8")
    return str(path)


def invoke(runner, *args):
    result = runner.invoke(cli, list(args))
    return result, (json.loads(result.stdout) if result.stdout.startswith("{") else None)


def test_h2_trivial_action(runner):
    result, report = invoke(runner, "h2", "--group", "catalog:V4", "--coeffs", "catalog:Z2")
    assert result.exit_code == 0
    assert report["h2_order"] == 8
    assert report["schema_version"] == "1.0"


def test_heisenberg_inversion_does_not_extend(runner):
    result, report = invoke(runner, "extend", "--group", "catalog:heisenberg(3)",
                            "--subgroup", "center", "--theta", "inversion")
    assert result.exit_code == 1
    assert report["succeeded"] is False
    assert report["obstruction"]["moduli"] == [3]


def test_verify_dihedral_center(runner, fast_config):
    result, report = invoke(runner, "verify", "--group", "catalog:dihedral(8)", "--subgroup", "center",
                            "--config", fast_config)
    assert result.exit_code == 0
    assert report["passed"] is True
    assert report["exactness"]["violations"] == []


def test_analyze_and_lift(runner):
    result, report = invoke(runner, "analyze", "--group", "catalog:dihedral(8)", "--subgroup", "center")
    assert result.exit_code == 0
    assert report["c2_order"] == 6 and len(report["liftable"]) == 2

    result, report = invoke(runner, "lift", "--group", "catalog:dihedral(8)", "--subgroup", "center",
                            "--phi", "identity")
    assert result.exit_code == 0
    assert report["succeeded"] is True


def test_lift_pair_on_cyclic_nine(runner):
    result, report = invoke(runner, "lift-pair", "--group", "Z9", "--subgroup", "gens:3",
                            "--theta", "inversion", "--phi", "inversion")
    assert result.exit_code == 0
    assert report["command"] == "lift-pair"


def test_sylow_extend_mode(runner):
    result, report = invoke(runner, "sylow", "--group", "Z18", "--subgroup", "gens:6", "--theta", "inversion")
    assert result.exit_code == 1
    assert report["mode"] == "extend"
    assert report["consistent"] is True


def test_split_quaternion_center(runner):
    result, report = invoke(runner, "split", "--group", "Q8", "--subgroup", "center")
    assert result.exit_code == 0
    assert report["extension_splits"] is False
    assert report["orders"]["c2_star"] == 6
    assert report["commutator_form"]["orthogonal_order"] == 6


def test_catalog_text_format(runner):
    result = runner.invoke(cli, ["catalog", "--group", "catalog:S3", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout.startswith("CatalogReport\n")


def test_output_file(runner, tmp_path):
    target = tmp_path / "report.csv"
    result = runner.invoke(cli, ["h2", "--group", "Z2", "--coeffs", "Z2", "--format", "csv", "-o", str(target)])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert "h2_order,2" in target.read_text(encoding="utf-8")


def test_corrupted_file_exits_two(runner, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({"cayley": [[0, 1], [0, 1]]}), encoding="utf-8")
    result, report = invoke(runner, "catalog", "--group", str(broken))
    assert result.exit_code == 2
    assert report["error"]["type"] == "CorpusEntryError"
    assert "broken.json" in report["error"]["message"]


def test_bound_exceeded_exits_three(runner):
    result, report = invoke(runner, "analyze", "--group", "catalog:dihedral(16)", "--subgroup", "center",
                            "--max-order", "8")
    assert result.exit_code == 3
    assert report["error"]["type"] == "BoundExceeded"


def test_unknown_specifier_exits_two(runner):
    result, report = invoke(runner, "extend", "--group", "Z4", "--subgroup", "gens:2", "--theta", "twist")
    assert result.exit_code == 2
    assert report["error"]["type"] == "BadParameters"


def test_missing_option_is_a_usage_error(runner):
    result = runner.invoke(cli, ["extend", "--group", "Z4"])
    assert result.exit_code == 2
    assert "--subgroup" in result.output


def test_verify_all_on_a_small_corpus(runner, tmp_path, fast_config):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "s3.json").write_text(json.dumps({"perm_degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}),
                                    encoding="utf-8")
    (corpus / "z4.json").write_text(json.dumps({"catalog": "Z4"}), encoding="utf-8")
    result, report = invoke(runner, "verify-all", str(corpus), "--config", fast_config)
    assert result.exit_code == 0
    # S3: 1 and A3; Z4: 1, Z2 and Z4
    assert len(report["entries"]) == 5
    assert report["failed"] == 0


def test_verify_all_stops_on_a_corrupted_entry(runner, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "bad.json").write_text("[[0, 1], [0, 1]", encoding="utf-8")
    result, report = invoke(runner, "verify-all", str(corpus))
    assert result.exit_code == 2
    assert "bad.json" in report["error"]["message"]


def test_verify_all_on_an_empty_corpus(runner, tmp_path):
    result, report = invoke(runner, "verify-all", str(tmp_path), "--format", "json")
    assert result.exit_code == 0
    assert report["entries"] == []
