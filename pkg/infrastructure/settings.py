import json
import os
from dataclasses import asdict
from typing import Optional

from pydantic import BaseModel, ConfigDict, PositiveInt, conint

from domain.bounds import DEFAULT_BOUNDS, Bounds

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config", "bounds.json")


class BoundsConfig(BaseModel):
    """Validated contents of bounds.json; missing keys fall back to the library defaults."""
    model_config = ConfigDict(extra="forbid")

    max_order: PositiveInt = DEFAULT_BOUNDS.max_order
    closure_bound: PositiveInt = DEFAULT_BOUNDS.closure_bound
    max_unknowns: PositiveInt = DEFAULT_BOUNDS.max_unknowns
    max_automorphisms: PositiveInt = DEFAULT_BOUNDS.max_automorphisms
    max_pairs: PositiveInt = DEFAULT_BOUNDS.max_pairs
    max_section_domain: PositiveInt = DEFAULT_BOUNDS.max_section_domain
    transversal_draws: PositiveInt = DEFAULT_BOUNDS.transversal_draws
    seed: conint(ge=0) = DEFAULT_BOUNDS.seed
    derivation_max: PositiveInt = DEFAULT_BOUNDS.derivation_max
    full_associativity_max: PositiveInt = DEFAULT_BOUNDS.full_associativity_max

    def to_bounds(self) -> Bounds:
        return Bounds(**self.model_dump())


class BoundsRepository:
    """
    Loads search bounds from a JSON file: explicit path, then EXTLIFT_CONFIG_PATH,
    then the shipped config/bounds.json. EXTLIFT_MAX_ORDER overrides max_order.
    """
    def __init__(self, config_path: Optional[str] = None):
        path_env = os.getenv("EXTLIFT_CONFIG_PATH")
        self.config_path = config_path or path_env or DEFAULT_CONFIG_PATH
        self._config = self._load()

    def _load(self) -> BoundsConfig:
        if not os.path.exists(self.config_path):
            raise FileNotFoundError(f"Bounds file not found at {self.config_path}")
        with open(self.config_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        max_order = os.getenv("EXTLIFT_MAX_ORDER")
        if max_order is not None:
            data["max_order"] = max_order
        return BoundsConfig.model_validate(data)

    def get_bounds(self, **overrides) -> Bounds:
        """Bounds with any non-None keyword overriding the file, e.g. from CLI flags."""
        values = self._config.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return BoundsConfig.model_validate(values).to_bounds()


def load_bounds(config_path: Optional[str] = None, **overrides) -> Bounds:
    return BoundsRepository(config_path).get_bounds(**overrides)


def bounds_as_dict(bounds: Bounds) -> dict:
    return asdict(bounds)
