"""
Exceptions - Error Hierarchy for Flat Manifold Computations

Every domain failure raised by the library derives from FlatSpecError,
which is itself a ValueError so callers validating user input can keep
catching the builtin type.
"""

from typing import Optional


class FlatSpecError(ValueError):
    """Base class for all domain errors."""


class DomainViolation(FlatSpecError):
    """An integer or rational argument lies outside its admissible range."""


class NonPositiveDefiniteGram(FlatSpecError):
    """A Gram matrix is not symmetric positive definite."""


class NonOrthogonalGenerator(FlatSpecError):
    """A point part does not preserve the lattice or the Gram form."""


class ClosureBoundExceeded(FlatSpecError):
    """Coset closure produced more holonomy elements than allowed."""


class CocycleInconsistent(FlatSpecError):
    """Two products share a point part but differ by a non-lattice translation."""


class TorsionViolation(FlatSpecError):
    """A coset contains an element with a fixed point."""


class IrrationalCharacterSum(FlatSpecError):
    """A character sum over roots of unity did not reduce to a rational."""


class NotDiagonalType(FlatSpecError):
    """An operation restricted to diagonal-type groups got another group."""


class ZeroLength(FlatSpecError):
    """A holonomy invariant was requested for an element of length zero."""


class BoxTooSmall(FlatSpecError):
    """The brute-force oracle could not certify its orbits inside the box."""


class TailNotControlled(FlatSpecError):
    """Series truncation could not bring the tail below the tolerance."""


class ParseError(FlatSpecError):
    """A group definition file is malformed."""

    def __init__(self, message: str, line: Optional[int] = None,
                 field: Optional[str] = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
