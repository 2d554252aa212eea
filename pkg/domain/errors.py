"""Exception hierarchy for extlift.

Every error raised by the domain layer is an ``ExtliftError``, which is a
``ValueError`` so callers that only know about bad input still catch it.
Bound violations sit on their own branch because the CLI reports them with a
different exit code.
"""


class ExtliftError(ValueError):
    """Base class for all extlift domain errors."""


class BoundError(ExtliftError):
    """A configured search or size bound was exceeded."""


class BoundExceeded(BoundError):
    pass


class ClosureBoundExceeded(BoundError):
    pass


class GroupAxiomError(ExtliftError):
    """A Cayley table failed one of the group axioms."""


class MalformedTable(GroupAxiomError):
    pass


class NotAssociative(GroupAxiomError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"Multiplication is not associative at ({a}, {b}, {c})")


class NoIdentity(GroupAxiomError):
    def __init__(self):
        super().__init__("Table has no identity element")


class NotLatinSquare(GroupAxiomError):
    def __init__(self, kind: str, index: int):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} of the table is not a permutation")


class UnknownName(ExtliftError):
    pass


class BadParameters(ExtliftError):
    pass


class NotNormal(ExtliftError):
    def __init__(self, element: int, member: int):
        self.element = element
        self.member = member
        super().__init__(
            f"Subgroup is not normal: conjugating {member} by {element} leaves the subgroup"
        )


class NotAbelian(ExtliftError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"Subgroup is not abelian: {a} and {b} do not commute")


class NotACocycle(ExtliftError):
    pass


class ParentMismatch(ExtliftError):
    pass


class NotCompatible(ExtliftError):
    pass


class NotCentral(ExtliftError):
    pass


class DoesNotNormalize(ExtliftError):
    pass


class TripleConditionsFail(ExtliftError):
    def __init__(self, condition: int, where: tuple):
        self.condition = condition
        self.where = where
        super().__init__(f"Triple condition ({condition}) fails at {where}")


class PrimeDoesNotDivide(ExtliftError):
    pass


class SylowNotInvariant(ExtliftError):
    def __init__(self, prime: int):
        self.prime = prime
        super().__init__(f"No Sylow {prime}-subgroup of the quotient is invariant under phi")


class NotCharacteristic(ExtliftError):
    pass


class NotSplit(ExtliftError):
    pass


class NotExtraspecialShape(ExtliftError):
    pass


class CorpusEntryError(ExtliftError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"{path}: {reason}")
