"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the command layer can
translate failures without a lookup table.
"""


class FrobError(Exception):
    exit_code = 3


class InvalidInput(FrobError, ValueError):
    exit_code = 2


class NotCoprime(InvalidInput):
    pass


class ParityError(InvalidInput):
    pass


class DomainViolation(InvalidInput):
    pass


class CommonFactor(InvalidInput):
    pass


class UnsupportedRegime(InvalidInput):
    """No classification exists for this (r, p) combination."""


class NoClosedForm(FrobError):
    """The regime is Irregular, Boundary, or has no stated formula."""

    exit_code = 2


class OutOfRegime(InvalidInput):
    pass


class DenumerantOverflow(FrobError, OverflowError):
    """A denumerant count or table index cannot be held without wraparound."""


class InexactDivision(FrobError, ArithmeticError):
    """A quantity that must be an integer came out fractional."""


class DecompositionFailure(FrobError):
    """An Apery element could not be placed on the requested coordinate grid."""


class BoundCapExceeded(FrobError):
    """A denumerant table would have to grow past the caller's size cap."""
