"""Exception hierarchy shared by every module.

Domain errors (anything a caller can trigger with legal-but-unsupported
inputs) derive from CompositeError so the CLI can map them to a single
exit code.  Parse errors are kept separate.
"""


class CompositeError(Exception):
    """Base for all domain-level failures."""

    @property
    def name(self) -> str:
        return type(self).__name__


class IncompatibleTag(CompositeError):
    pass


class NotGCDDomain(CompositeError):
    pass


class BothZero(CompositeError):
    pass


class UnsupportedPair(CompositeError):
    pass


class KEqualsL(CompositeError):
    pass


class PairMismatch(CompositeError):
    pass


class ZeroElement(CompositeError):
    pass


class ZeroDivisor(CompositeError):
    pass


class ZeroInput(CompositeError):
    pass


class NotQuotientField(CompositeError):
    pass


class NotGCDConfiguration(CompositeError):
    pass


class UnitDenominatorZero(CompositeError):
    pass


class NotBezoutConfiguration(CompositeError):
    pass


class NotPruferConfiguration(CompositeError):
    pass


class NotNGeneratorConfiguration(CompositeError):
    pass


class UnknownClassGroup(CompositeError):
    pass


class InsufficientData(CompositeError):
    pass


class NotPrime(CompositeError):
    pass


class InvariantViolation(CompositeError):
    """An internal postcondition failed; always a bug, never user error."""


class ParseError(Exception):
    def __init__(self, message: str, position: int, text: str) -> None:
        super().__init__(f"{message} at position {position}: {text!r}")
        self.message = message
        self.position = position
        self.text = text
