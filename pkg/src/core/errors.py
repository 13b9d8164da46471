# src/core/errors.py
"""Exception hierarchy shared by every module; exit_code is what the CLI returns."""


class AlgebraError(Exception):
    """Base class for all errors raised by the engine."""

    exit_code = 1


class RingMismatchError(AlgebraError):
    pass


class CharacteristicError(AlgebraError):
    """A characteristic-zero-only operation was called over GF(p)."""


class ResourceLimitError(AlgebraError):
    """A configured Buchberger cap was exceeded; no partial answer is returned."""

    exit_code = 4


class DegenerateInputError(AlgebraError):
    pass


class PreconditionError(AlgebraError):
    """A documented precondition or hypothesis gate failed."""

    exit_code = 3


class RefutedRadicalError(PreconditionError):
    def __init__(self, message: str, offending: str | None = None):
        super().__init__(message)
        self.offending = offending


class DimensionError(PreconditionError):
    pass


class NotMonomialError(PreconditionError):
    pass


class ProblemParseError(AlgebraError):
    """Problem-file error with a 1-based line/column position."""

    exit_code = 2

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
