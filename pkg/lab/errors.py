"""Exception hierarchy shared by the library, the suites and the CLI."""


class PedestalLabError(Exception):
    """Base class for every error raised by pedestal-lab."""


class InputError(PedestalLabError, ValueError):
    """Bad user input. The CLI maps these to exit code 2."""


class ParseError(InputError):
    pass


class InvalidShape(InputError):
    pass


class InvalidFilter(InputError):
    pass


class InvalidPartition(InputError):
    """A filling, X-partition or Y-sequence that breaks its invariants."""


class CycleDetected(InputError):
    pass


class UnknownLabel(InputError):
    pass


class MismatchedPoset(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class SkewNotSupported(InputError):
    pass


class InvalidDocument(InputError):
    """A poset document that fails schema validation."""


class UnknownSuite(PedestalLabError):
    pass


class ExtensionLimitExceeded(InputError):
    pass


class NotDivisible(PedestalLabError, ArithmeticError):
    pass


class NonIntegerCoefficients(PedestalLabError, ArithmeticError):
    pass


class SeriesMismatch(PedestalLabError, ArithmeticError):
    pass


class InternalInvariantViolation(PedestalLabError):
    """Raised when a reconstruction fails. This is a bug, not bad input."""


class EigenExtractionFailed(PedestalLabError):
    def __init__(self, message: str, document: dict | None = None):
        super().__init__(message)
        self.document = document


class InvalidPermutation(InputError):
    pass
