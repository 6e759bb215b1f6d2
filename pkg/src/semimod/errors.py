"""Exception types shared across the package."""


class SemimodError(Exception):
    """Base class for all errors raised by semimod."""


class MalformedTableError(SemimodError, ValueError):
    """A table has inconsistent dimensions or out-of-range entries."""


class CoefficientOverflowError(SemimodError, OverflowError):
    """A structure coefficient left the unsigned 64-bit range."""


class NegativeCoefficientError(SemimodError, ArithmeticError):
    """A change of basis produced a negative structure constant."""


class InvalidGroupError(SemimodError, ValueError):
    pass


class BoundExceededError(SemimodError, ValueError):
    """An enumeration was asked to go beyond its configured size bound."""


class NotACongruenceError(SemimodError, ValueError):
    pass


class SemiringMismatchError(SemimodError, ValueError):
    pass


class NotALeftCellError(SemimodError, ValueError):
    pass


class NilpotentCellError(SemimodError, ValueError):
    """Reduced cell semimodules need an idempotent two-sided cell."""


class ApexError(SemimodError, ValueError):
    """The apex is undefined or not unique for the given semimodule."""


class MixedAnnihilationError(SemimodError, AssertionError):
    """Some but not all members of a two-sided cell annihilate a semimodule."""


class SchemaError(SemimodError, ValueError):
    """JSON input does not match the expected schema.

    ``path`` points at the offending location, e.g. ``$.actions[2]``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
