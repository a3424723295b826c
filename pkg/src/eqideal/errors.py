"""Exception hierarchy shared by all modules."""


class EqIdealError(Exception):
    """Base class; ``kind`` is the short tag printed by the CLI."""

    kind = "error"


class DomainError(EqIdealError, ValueError):
    kind = "domain"


class NoExtensionError(DomainError):
    kind = "no-extension"


class ParseError(EqIdealError, ValueError):
    kind = "syntax"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class ShapeError(EqIdealError, ValueError):
    kind = "shape"


class ValidationError(EqIdealError, ValueError):
    kind = "validation"


class ResourceError(EqIdealError, RuntimeError):
    """Raised when a configured budget (fuel, variable bound) is exceeded."""

    kind = "resource"

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class InternalInvariantError(ResourceError):
    """A budget that the theory says can never be exhausted was exhausted."""

    kind = "internal"
