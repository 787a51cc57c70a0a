"""Exception types shared across the package."""


class SurfaceMismatch(ValueError):
    """Operands live on different surfaces, or an op got the wrong surface kind."""


class UnsupportedSurface(ValueError):
    """The requested criterion or construction is not defined on this surface."""


class PreconditionViolated(ValueError):
    """A documented precondition of the operation does not hold."""


class NotApplicable(ValueError):
    """The operation is undefined for these arguments (e.g. equal classes)."""


class NotFound(LookupError):
    """An exhaustive search finished without a hit."""


class InternalError(RuntimeError):
    """A state that should be impossible; signals a bug, not bad input."""


class DivisorParseError(ValueError):
    """Divisor text does not conform to the grammar.

    ``position`` is the 0-based character offset of the offending token in
    the original input string.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
