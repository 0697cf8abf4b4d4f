"""
Exception hierarchy for the census toolkit.

Every error raised on purpose by the package derives from CensusError and
carries the process exit code the CLI reports for it.
"""


class CensusError(Exception):
    """Base class for all census errors."""

    exit_code = 1


class PreconditionError(CensusError):
    """A mathematical precondition (gcd, degree, field) does not hold."""

    exit_code = 2


class MalformedInputError(CensusError, ValueError):
    """Input could not be parsed or failed schema validation."""

    exit_code = 3


class CensusIOError(CensusError, OSError):
    """Reading or writing a census file failed."""

    exit_code = 4


class FieldDomainError(CensusError, ArithmeticError):
    """Arithmetic outside the domain of a field operation, e.g. 1/0."""

    exit_code = 3
