"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` (the class name) so the
CLI can serialise it as ``{"error": code, "detail": ...}``.
"""


class OrdimError(Exception):
    """Base class for all domain errors raised by the toolkit."""

    @property
    def code(self) -> str:
        return type(self).__name__

    @property
    def detail(self) -> str:
        return str(self.args[0]) if self.args else ""


# poset core
class DuplicateLabel(OrdimError):
    pass


class UnknownLabel(OrdimError):
    pass


class CycleDetected(OrdimError):
    pass


class NotPartialOrder(OrdimError):
    pass


class GroundSetMismatch(OrdimError):
    pass


class EmptyList(OrdimError):
    pass


# extension engine
class EmptySequence(OrdimError):
    pass


class NotUpperDense(OrdimError):
    pass


class BadFirstWitness(OrdimError):
    pass


class NotIncreasing(OrdimError):
    def __init__(self, index: int, detail: str = ""):
        super().__init__(detail or f"family member {index} is not up-closed")
        self.index = index


class InsufficientSeparation(OrdimError):
    def __init__(self, detail: str, pair=None):
        super().__init__(detail)
        self.pair = pair


class IllegalSimplification(OrdimError):
    pass


class BadBase(OrdimError):
    pass


class NotMonotone(OrdimError):
    pass


class TupleCollision(OrdimError):
    pass


class NotAntichain(OrdimError):
    pass


class NotTotalOnA(OrdimError):
    pass


class DecompositionOverlap(OrdimError):
    pass


# representations
class DimensionMismatch(OrdimError):
    pass


class NotMultiUtility(OrdimError):
    pass


class BadRadix(OrdimError):
    pass


class NotRealizer(OrdimError):
    pass


class NotInjectiveMultiUtility(OrdimError):
    pass


# dimension / generators
class CapExceeded(OrdimError):
    pass


class BadParams(OrdimError):
    pass


class ConstructionFailed(OrdimError):
    pass
