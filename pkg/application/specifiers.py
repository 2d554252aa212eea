"""Textual automorphism specifiers accepted by --theta and --phi.

    identity | id          the identity
    inversion              x -> x^-1 (abelian groups)
    power:r                x -> x^r (abelian groups)
    inner:g                x -> g x g^-1
    index:i | i            the i-th element of the sorted automorphism group
    images:a,b,c,...       the full image list, element 0 first
    gens:a->b,c->d         images of a generating set
"""
from typing import Optional

from domain.bounds import DEFAULT_BOUNDS, Bounds
from domain.errors import BadParameters
from domain.groups.automorphisms import (
    automorphism_from_generator_images,
    automorphism_group,
    inner_automorphism,
    inversion,
    power_map,
)
from domain.groups.finite_group import FiniteGroup, GroupAutomorphism


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError as exc:
        raise BadParameters(f"Expected an integer in automorphism specifier, got {text!r}") from exc


def _element(group: FiniteGroup, text: str) -> int:
    x = _int(text)
    if not 0 <= x < group.order:
        raise BadParameters(f"Element {x} is outside 0..{group.order - 1}")
    return x


def parse_automorphism(
    spec: Optional[str],
    group: FiniteGroup,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> GroupAutomorphism:
    if spec is None or spec.strip() in ("", "id", "identity"):
        return GroupAutomorphism.identity(group)
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    if spec == "inversion":
        return inversion(group)
    if kind == "power":
        return power_map(group, _int(rest))
    if kind == "inner":
        return inner_automorphism(group, _element(group, rest))
    if kind == "images":
        return GroupAutomorphism.checked(group, [_int(y) for y in rest.split(",")])
    if kind == "gens":
        assignment = {}
        for item in rest.split(","):
            source, arrow, target = item.partition("->")
            if not arrow:
                raise BadParameters(f"Generator image {item!r} must read a->b")
            assignment[_element(group, source)] = _element(group, target)
        return automorphism_from_generator_images(group, assignment)
    if kind == "index" or spec.lstrip("-").isdigit():
        index = _int(rest if kind == "index" else spec)
        automorphisms = automorphism_group(group, bounds)
        if not 0 <= index < len(automorphisms):
            raise BadParameters(f"Automorphism index {index} is outside 0..{len(automorphisms) - 1}")
        return automorphisms[index]
    raise BadParameters(f"Unknown automorphism specifier {spec!r}")
