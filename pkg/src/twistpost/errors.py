"""Exception types raised by the validators and constructors."""


class TwistpostError(Exception):
    """Base class for all package errors."""


class NotAssociative(TwistpostError):
    """A candidate Cayley table fails associativity; carries the witness triple."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not associative at triple {witness}")


class NoIdentity(TwistpostError):
    """No two-sided neutral element exists in the table."""


class NoInverse(TwistpostError):
    """Some element has no two-sided inverse; carries the witness element."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element {witness} has no two-sided inverse")


class UnsupportedOrder(TwistpostError):
    """A builtin construction would exceed the configured maximum order."""


class BoundExceeded(TwistpostError):
    """An exhaustive search was requested beyond its configured bound."""


class DimensionMismatch(TwistpostError):
    """Table or tensor sizes do not agree."""


class InvalidStructure(TwistpostError):
    """A constructor was fed tables that fail the defining laws.

    The verification report, when available, is attached as ``report``.
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class InternalInconsistency(TwistpostError):
    """A derived structure failed a check that is a theorem for valid input.

    Seeing this means a bug in the library (or genuinely inconsistent
    mathematics), never bad user input.
    """


class CocycleNotSurjective(TwistpostError):
    """The brace construction needs a surjective cocycle."""


class CocycleNotNormalized(TwistpostError):
    """The group-algebra extension needs the cocycle to fix the identity."""


class SearchSpaceExceeded(TwistpostError):
    """A reconstruction search space is larger than the configured cap."""


class VerificationMismatch(TwistpostError):
    """A catalog entry failed re-verification on load."""
