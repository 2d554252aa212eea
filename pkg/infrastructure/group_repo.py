import glob
import json
import os
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError, model_validator

from application.services import GroupRepositoryInterface
from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.errors import BadParameters, BoundError, BoundExceeded, CorpusEntryError, ExtliftError
from domain.groups.finite_group import FiniteGroup, Subgroup, group_from_cayley
from domain.groups.permutations import group_from_permutations
from domain.groups.structure import center, derived_subgroup, sylow_subgroup
from infrastructure.catalog_expression import parse_catalog_expression
from infrastructure.logger import extlift_logger

CATALOG_PREFIX = "catalog:"


class GroupFile(BaseModel):
    """One group per JSON file: a Cayley table, permutation generators or a catalog expression."""
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    cayley: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    perm_degree: Optional[PositiveInt] = None
    generators: Optional[List[List[int]]] = None
    catalog: Optional[str] = None

    @model_validator(mode="after")
    def _one_form(self) -> "GroupFile":
        forms = [self.cayley is not None, self.generators is not None, self.catalog is not None]
        if sum(forms) != 1:
            raise ValueError("exactly one of 'cayley', 'generators' or 'catalog' is required")
        if self.generators is not None and self.perm_degree is None:
            raise ValueError("'generators' needs 'perm_degree'")
        return self


class SubgroupFile(BaseModel):
    """Subgroup members as group indices; a bare JSON list is read as the members."""
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    members: List[int]


class JsonGroupRepository(GroupRepositoryInterface):
    def __init__(self, bounds: Bounds = DEFAULT_BOUNDS):
        self.bounds = bounds
        self.logger = extlift_logger.get_component_logger("group_repo")

    def load_group(self, source: str) -> FiniteGroup:
        """A JSON file path, ``catalog:<expr>``, or a bare expression that names no file."""
        if source.startswith(CATALOG_PREFIX):
            return self._check_order(parse_catalog_expression(source[len(CATALOG_PREFIX):], self.bounds.max_order))
        if not os.path.exists(source):
            if source.endswith(".json") or os.sep in source:
                raise FileNotFoundError(f"Group file not found at {source}")
            return self._check_order(parse_catalog_expression(source, self.bounds.max_order))
        try:
            with open(source, 'r', encoding='utf-8') as f:
                data = json.load(f)
            spec = GroupFile.model_validate(data)
            group = self._build(spec, default_name=os.path.splitext(os.path.basename(source))[0])
        except json.JSONDecodeError as exc:
            raise CorpusEntryError(source, f"invalid JSON: {exc.msg}") from exc
        except ValidationError as exc:
            raise CorpusEntryError(source, f"invalid group file: {exc.errors()[0]['msg']}") from exc
        except BoundError:
            raise
        except ExtliftError as exc:
            if isinstance(exc, CorpusEntryError):
                raise
            raise CorpusEntryError(source, str(exc)) from exc
        self.logger.debug(f"Loaded {group.name} of order {group.order} from {source}")
        return group

    def _build(self, spec: GroupFile, default_name: str) -> FiniteGroup:
        name = spec.name or default_name
        if spec.cayley is not None:
            if len(spec.cayley) > self.bounds.max_order:
                raise BoundExceeded(f"Table of order {len(spec.cayley)} exceeds max_order {self.bounds.max_order}")
            return group_from_cayley(
                spec.cayley,
                name=name,
                element_labels=spec.labels,
                full_associativity_max=self.bounds.full_associativity_max,
                seed=self.bounds.seed,
            )
        if spec.generators is not None:
            group = group_from_permutations(spec.perm_degree, spec.generators, name=name,
                                            closure_bound=self.bounds.closure_bound)
        else:
            parsed = parse_catalog_expression(spec.catalog, self.bounds.max_order)
            group = FiniteGroup(table=parsed.table, name=spec.name or parsed.name,
                                element_labels=parsed.element_labels)
        return self._check_order(group)

    def _check_order(self, group: FiniteGroup) -> FiniteGroup:
        if group.order > self.bounds.max_order:
            raise BoundExceeded(f"{group.name} has order {group.order}, above max_order {self.bounds.max_order}")
        return group

    def resolve_subgroup(self, group: FiniteGroup, spec: str) -> Subgroup:
        """center | derived | trivial | whole | sylow:p | gens:a,b,... | a,b,c (members) | path to a JSON member list."""
        spec = spec.strip()
        if spec == "center":
            return center(group)
        if spec == "derived":
            return derived_subgroup(group)
        if spec == "trivial":
            return group.trivial_subgroup()
        if spec == "whole":
            return group.whole()
        if spec.startswith("sylow:"):
            return sylow_subgroup(group, _parse_int(spec[len("sylow:"):]))
        if spec.startswith("gens:"):
            return group.generated_subgroup(_parse_int_list(spec[len("gens:"):]))
        if spec.endswith(".json"):
            if not os.path.exists(spec):
                raise FileNotFoundError(f"Subgroup file not found at {spec}")
            return group.subgroup(self._load_subgroup_file(spec).members)
        return group.subgroup(_parse_int_list(spec.strip("[]")))

    def _load_subgroup_file(self, path: str) -> SubgroupFile:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if isinstance(data, list):
                data = {"members": data}
            return SubgroupFile.model_validate(data)
        except json.JSONDecodeError as exc:
            raise CorpusEntryError(path, f"invalid JSON: {exc.msg}") from exc
        except ValidationError as exc:
            raise CorpusEntryError(path, f"invalid subgroup file: {exc.errors()[0]['msg']}") from exc

    def list_corpus(self, directory: str) -> List[str]:
        if not os.path.isdir(directory):
            raise FileNotFoundError(f"Corpus directory not found at {directory}")
        return sorted(glob.glob(os.path.join(directory, "*.json")))


def _parse_int(text) -> int:
    try:
        return int(text)
    except (TypeError, ValueError) as exc:
        raise BadParameters(f"Expected an integer, got {text!r}") from exc


def _parse_int_list(text: str) -> List[int]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise BadParameters("Empty element list")
    return [_parse_int(p) for p in parts]
