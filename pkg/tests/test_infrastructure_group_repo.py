import json
import os
from unittest.mock import Mock, patch

import pytest
from pytest import raises

from domain.bounds import Bounds
from domain.errors import BadParameters, BoundExceeded, ClosureBoundExceeded, CorpusEntryError, NotNormal
from domain.groups.catalog import GroupFactory, cyclic, dihedral, direct_product
from domain.groups.structure import require_normal
from infrastructure.group_repo import GroupFile, JsonGroupRepository

CATALOG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "catalog")


@pytest.fixture
def repo():
    return JsonGroupRepository()


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_load_cayley_file_with_labels(repo):
    group = repo.load_group(os.path.join(CATALOG_DIR, "klein4.json"))
    assert group.order == 4
    assert group.name == "V4"
    assert group.label(3) == "ab"


def test_load_permutation_file(repo):
    group = repo.load_group(os.path.join(CATALOG_DIR, "symmetric3.json"))
    assert group.order == 6
    assert not group.is_abelian()


def test_load_catalog_file_and_expressions(repo):
    assert repo.load_group(os.path.join(CATALOG_DIR, "z3xs3.json")).order == 18
    assert repo.load_group("catalog:dihedral(8)").order == 8
    assert repo.load_group("Q8").order == 8


def test_shipped_corpus_loads(repo):
    paths = repo.list_corpus(CATALOG_DIR)
    assert paths == sorted(paths)
    assert len(paths) >= 10
    for path in paths:
        assert repo.load_group(path).order <= 32


def test_file_name_is_the_default_name(repo, tmp_path):
    path = write_json(tmp_path / "z2.json", {"cayley": [[0, 1], [1, 0]]})
    assert repo.load_group(path).name == "z2"


def test_missing_file(repo, tmp_path):
    with raises(FileNotFoundError):
        repo.load_group(str(tmp_path / "absent.json"))


def test_corrupted_table_names_the_file(repo, tmp_path):
    path = write_json(tmp_path / "broken.json", {"cayley": [[0, 1], [0, 1]]})
    with raises(CorpusEntryError) as info:
        repo.load_group(path)
    assert info.value.path == path
    assert "broken.json" in str(info.value)


def test_invalid_json_and_schema(repo, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with raises(CorpusEntryError):
        repo.load_group(str(bad))

    both = write_json(tmp_path / "both.json", {"cayley": [[0]], "catalog": "Z2"})
    with raises(CorpusEntryError):
        repo.load_group(both)

    extra = write_json(tmp_path / "extra.json", {"cayley": [[0]], "colour": "red"})
    with raises(CorpusEntryError):
        repo.load_group(extra)


def test_group_file_model():
    with raises(ValueError):
        GroupFile(generators=[[1, 0]])
    spec = GroupFile(perm_degree=2, generators=[[1, 0]])
    assert spec.cayley is None


def test_bounds_are_enforced(tmp_path):
    repo = JsonGroupRepository(Bounds(max_order=4))
    with raises(BoundExceeded):
        repo.load_group("catalog:dihedral(8)")
    table = write_json(tmp_path / "z6.json", {"cayley": [[(a + b) % 6 for b in range(6)] for a in range(6)]})
    with raises(BoundExceeded):
        repo.load_group(table)

    small = JsonGroupRepository(Bounds(closure_bound=10))
    perms = write_json(tmp_path / "s4.json", {"perm_degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]})
    with raises(ClosureBoundExceeded):
        small.load_group(perms)


@pytest.mark.parametrize("expression", [
    "cyclic(3000)",
    "Z2^40",
    "symmetric(50)",
    "alternating(12)",
    "heisenberg(101)",
    "extraspecial_plus(30)",
    "elementary_abelian(3, 1000)",
    "semidirect(Z4, Z8, 1)",
    "direct_product(Z4, Z8)",
])
def test_oversized_catalog_groups_are_rejected_before_building(expression):
    repo = JsonGroupRepository(Bounds(max_order=16))
    with raises(BoundExceeded):
        repo.load_group("catalog:" + expression)


def test_oversized_factors_are_never_built():
    repo = JsonGroupRepository(Bounds(max_order=16))
    builder = Mock(wraps=cyclic)
    with patch.dict(GroupFactory.FAMILIES, {"cyclic": builder}):
        with raises(BoundExceeded):
            repo.load_group("catalog:cyclic(3000)")
    builder.assert_not_called()

    with patch("infrastructure.catalog_expression.direct_product", wraps=direct_product) as product:
        with raises(BoundExceeded):
            repo.load_group("catalog:Z4 x Z8")
        assert repo.load_group("catalog:Z2 x Z8").order == 16
    assert product.call_count == 1


def test_resolve_named_subgroups(repo):
    d8 = dihedral(8)
    assert repo.resolve_subgroup(d8, "center").order == 2
    assert repo.resolve_subgroup(d8, "derived").order == 2
    assert repo.resolve_subgroup(d8, "trivial").order == 1
    assert repo.resolve_subgroup(d8, "whole").order == 8
    assert repo.resolve_subgroup(d8, "sylow:2").order == 8
    assert repo.resolve_subgroup(d8, "gens:1").order == 4


def test_resolve_member_lists(repo, tmp_path):
    d8 = dihedral(8)
    assert repo.resolve_subgroup(d8, "0,1,2,3").order == 4
    assert repo.resolve_subgroup(d8, "[0, 2]").order == 2
    path = write_json(tmp_path / "members.json", {"members": [0, 2]})
    assert repo.resolve_subgroup(d8, path).order == 2
    path = write_json(tmp_path / "plain.json", [0, 1, 2, 3])
    assert repo.resolve_subgroup(d8, path).order == 4


@pytest.mark.parametrize("payload", [{"elements": [0, 1]}, 5, "0,2", {"members": [0, "two"]}])
def test_malformed_subgroup_files(repo, tmp_path, payload):
    path = write_json(tmp_path / "members.json", payload)
    with raises(CorpusEntryError) as info:
        repo.resolve_subgroup(dihedral(8), path)
    assert info.value.path == path


def test_subgroup_file_that_is_not_json(repo, tmp_path):
    path = tmp_path / "members.json"
    path.write_text("[0, 2", encoding="utf-8")
    with raises(CorpusEntryError):
        repo.resolve_subgroup(dihedral(8), str(path))


def test_resolve_rejects_bad_specs(repo, tmp_path):
    d8 = dihedral(8)
    with raises(BadParameters):
        repo.resolve_subgroup(d8, "sylow:two")
    with raises(BadParameters):
        repo.resolve_subgroup(d8, "0,1")
    with raises(BadParameters):
        repo.resolve_subgroup(d8, "")
    with raises(FileNotFoundError):
        repo.resolve_subgroup(d8, str(tmp_path / "none.json"))
    # a reflection subgroup is not normal
    with raises(NotNormal):
        require_normal(repo.resolve_subgroup(d8, "0,4"))


def test_list_corpus(repo, tmp_path):
    write_json(tmp_path / "b.json", {"catalog": "Z2"})
    write_json(tmp_path / "a.json", {"catalog": "Z3"})
    (tmp_path / "notes.txt").write_text("skip me", encoding="utf-8")
    assert [os.path.basename(p) for p in repo.list_corpus(str(tmp_path))] == ["a.json", "b.json"]
    with raises(FileNotFoundError):
        repo.list_corpus(str(tmp_path / "nowhere"))
