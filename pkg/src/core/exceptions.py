"""
Custom exceptions for twisted-codes.

All exceptions include context for structured logging.
"""
from typing import Dict, Any, Optional


class TwistedCodesError(Exception):
    """Base exception for all twisted-codes errors."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        self.message = message
        self.context = context or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dict for logging."""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "context": self.context
        }


# Field Exceptions
class FieldError(TwistedCodesError):
    """Finite field error."""
    pass


class FieldParameterError(FieldError):
    """Invalid field parameters (p, m, bound, subfield degree)."""
    pass


class FieldDomainError(FieldError):
    """Operation undefined for the given element."""
    pass


# Linear Algebra Exceptions
class LinearAlgebraError(TwistedCodesError):
    """Linear algebra error."""
    pass


class DimensionMismatchError(LinearAlgebraError):
    """Operand shapes or fields do not match."""
    pass


# Code Exceptions
class CodeError(TwistedCodesError):
    """Linear code error."""
    pass


class CapacityError(CodeError):
    """Enumeration or DP bound exceeded."""
    pass


class InvalidCodeError(CodeError):
    """Code or code map built from invalid data."""
    pass


class InconsistencyError(TwistedCodesError):
    """A closed form disagreed with its oracle."""
    pass


# Spec Exceptions
class SpecError(TwistedCodesError):
    """Invalid code parameters."""
    pass


class InvalidSpecError(SpecError):
    """CodeSpec or GrsSpec violates its invariants."""
    pass


class TheoremRangeError(SpecError):
    """Parameters outside the range where a result holds."""
    pass


class VariantError(SpecError):
    """Analysis requested for a twist other than (t, h) = (1, k-1)."""
    pass


# Construction Exceptions
class ConstructionError(TwistedCodesError):
    """Construction preconditions failed or output did not certify."""
    pass


# CLI Exceptions
class CliUsageError(TwistedCodesError):
    """Invalid command-line usage."""
    pass
