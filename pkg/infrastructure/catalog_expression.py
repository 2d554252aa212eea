"""Recursive-descent parser for catalog group expressions.

    expr    := power ('x' power)*
    power   := atom ('^' INT)?
    atom    := NAME '(' [arg (',' arg)*] ')' | SHORTHAND | '(' expr ')'
    arg     := INT | expr

Shorthands: Z<n>, D<n>, Q<n>, S<n>, A<n> and V4. ``semidirect(N, K, r)`` lets
a cyclic K act on a cyclic N through its generator acting by x -> r x.
"""
import re
from typing import List, Optional, Tuple, Union

from domain.errors import BadParameters, BoundExceeded, UnknownName
from domain.groups.catalog import GroupFactory, capped_power, direct_product, power_action, semidirect_product
from domain.groups.finite_group import FiniteGroup

TOKEN = re.compile(
    r"\s*(?:(?P<short>V4|[ZDQSA]\d+)|(?P<times>x(?![a-z_])|\*)|(?P<name>[a-z_][a-z_0-9]*)"
    r"|(?P<int>-?\d+)|(?P<punct>[(),^]))"
)

ALIASES = {
    "heisenberg": "heisenberg_mod_p",
    "quaternion": "generalized_quaternion",
    "dicyclic": "generalized_quaternion",
}

SHORTHANDS = {
    "Z": "cyclic",
    "D": "dihedral",
    "Q": "generalized_quaternion",
    "S": "symmetric",
    "A": "alternating",
}


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens, position = [], 0
    text = text.strip()
    while position < len(text):
        match = TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise BadParameters(f"Cannot parse group expression at {text[position:]!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


def _is_cyclic(group: FiniteGroup) -> bool:
    return group.is_abelian() and group.exponent == group.order


def semidirect(normal: FiniteGroup, complement: FiniteGroup, r: int) -> FiniteGroup:
    if not _is_cyclic(normal) or not _is_cyclic(complement):
        raise BadParameters("semidirect(N, K, r) needs cyclic N and K")
    generator = next(x for x in range(complement.order) if complement.element_orders[x] == complement.order)
    normal_generator = next(x for x in range(normal.order) if normal.element_orders[x] == normal.order)
    # the action is given on powers of the chosen generators
    steps = power_action(normal.order, complement.order, r)
    n_index = [normal.power(normal_generator, a) for a in range(normal.order)]
    k_index = [complement.power(generator, j) for j in range(complement.order)]
    action = [None] * complement.order
    for j, images in enumerate(steps):
        mapping = [0] * normal.order
        for a, b in enumerate(images):
            mapping[n_index[a]] = n_index[b]
        action[k_index[j]] = mapping
    return semidirect_product(normal, complement, action)


class CatalogExpressionParser:
    """Builds the group an expression names. With ``max_order`` set, every factor,
    product and power is checked against it before its table is built.
    """
    def __init__(self, text: str, max_order: Optional[int] = None):
        self.text = text
        self.max_order = max_order
        self.tokens = tokenize(text)
        self.position = 0

    def parse(self) -> FiniteGroup:
        group = self._expr()
        if self.position != len(self.tokens):
            raise BadParameters(f"Unexpected trailing input in {self.text!r}")
        group_name = self.text.strip()
        return FiniteGroup(table=group.table, name=group_name, element_labels=group.element_labels)

    def _within_bound(self, order: int, what: str):
        if self.max_order is not None and order > self.max_order:
            raise BoundExceeded(f"{what} in {self.text!r} has order above max_order {self.max_order}")

    def _peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else (None, None)

    def _take(self, kind: str, value: str = None) -> str:
        token_kind, token_value = self._peek()
        if token_kind != kind or (value is not None and token_value != value):
            expected = value or kind
            raise BadParameters(f"Expected {expected!r} in {self.text!r}")
        self.position += 1
        return token_value

    def _expr(self) -> FiniteGroup:
        group = self._power()
        while self._peek()[0] == "times":
            self.position += 1
            factor = self._power()
            self._within_bound(group.order * factor.order, "direct product")
            group = direct_product(group, factor)
        return group

    def _power(self) -> FiniteGroup:
        group = self._atom()
        if self._peek() == ("punct", "^"):
            self.position += 1
            exponent = int(self._take("int"))
            if exponent < 1:
                raise BadParameters("Direct powers need a positive exponent")
            if self.max_order is not None:
                self._within_bound(capped_power(group.order, exponent, self.max_order), "direct power")
            result = group
            for _ in range(exponent - 1):
                result = direct_product(result, group)
            group = result
        return group

    def _atom(self) -> FiniteGroup:
        kind, value = self._peek()
        if kind == "short":
            self.position += 1
            if value == "V4":
                return GroupFactory.create("elementary_abelian", 2, 2, max_order=self.max_order)
            return GroupFactory.create(SHORTHANDS[value[0]], int(value[1:]), max_order=self.max_order)
        if kind == "punct" and value == "(":
            self.position += 1
            group = self._expr()
            self._take("punct", ")")
            return group
        if kind == "name":
            self.position += 1
            args = self._arguments()
            if value == "semidirect":
                if len(args) != 3:
                    raise BadParameters("semidirect takes (normal, complement, r)")
                if all(isinstance(a, FiniteGroup) for a in args[:2]):
                    self._within_bound(args[0].order * args[1].order, "semidirect product")
                return semidirect(*args)
            name = ALIASES.get(value, value)
            if name not in GroupFactory.FAMILIES:
                raise UnknownName(f"Unknown group family: {value}")
            if name == "direct_product" and len(args) == 2 and all(isinstance(a, FiniteGroup) for a in args):
                self._within_bound(args[0].order * args[1].order, "direct product")
            return GroupFactory.create(name, *args, max_order=self.max_order)
        raise BadParameters(f"Expected a group in {self.text!r}")

    def _arguments(self) -> List[Union[int, FiniteGroup]]:
        self._take("punct", "(")
        args: List[Union[int, FiniteGroup]] = []
        if self._peek() == ("punct", ")"):
            self.position += 1
            return args
        while True:
            if self._peek()[0] == "int":
                args.append(int(self._take("int")))
            else:
                args.append(self._expr())
            if self._peek() == ("punct", ","):
                self.position += 1
                continue
            self._take("punct", ")")
            return args


def parse_catalog_expression(text: str, max_order: Optional[int] = None) -> FiniteGroup:
    return CatalogExpressionParser(text, max_order).parse()
