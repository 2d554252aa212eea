from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Search and size limits shared by every enumeration in the domain layer."""
    max_order: int = 512
    closure_bound: int = 20000
    max_unknowns: int = 20000
    max_automorphisms: int = 100000
    max_pairs: int = 250000
    max_section_domain: int = 120
    transversal_draws: int = 50
    seed: int = 0
    derivation_max: int = 48
    full_associativity_max: int = 512


DEFAULT_BOUNDS = Bounds()
