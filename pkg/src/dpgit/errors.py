"""Exception taxonomy shared across the package.

Parse problems and mathematical/domain problems are kept distinct so the
command line interface can map them to different exit codes.
"""


class DpgitError(Exception):
    """Base class for all package-specific errors."""


class ParseError(DpgitError):
    """Raised when an input document cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class MathDomainError(DpgitError, ValueError):
    """Raised when an input is outside the mathematical domain of an operation."""


class TowerExtensionError(MathDomainError):
    """Raised when a computation would need a second algebraic extension."""

    def __init__(self, message: str = "tower extension required"):
        super().__init__(message)


class DegenerateInputError(MathDomainError):
    """Raised for degenerate inputs (zero polynomials, identically singular pencils...)."""


class TruncationError(MathDomainError):
    """Raised when the series truncation order is provably insufficient."""

    def __init__(self, message: str = "raise truncation order"):
        super().__init__(message)


class ExcludedByClassificationError(MathDomainError):
    """Raised for configurations the classification rules out (e.g. branch through a vertex)."""

    def __init__(self, message: str = "excluded by classification"):
        super().__init__(message)
