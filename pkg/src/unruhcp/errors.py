"""Exception hierarchy shared by all modules."""


class UnruhCPError(Exception):
    """Base class for all library errors."""


class InputError(UnruhCPError, ValueError):
    """Malformed configuration, atom file or CLI argument."""


class DomainError(UnruhCPError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class RegimeError(UnruhCPError):
    """Input lies in a regime the requested evaluator must not be used in."""


class NumericalFailure(UnruhCPError):
    """Quadrature or series evaluation did not converge.

    Carries the best available estimate so callers can degrade gracefully.
    """

    def __init__(self, message, partial=None, error_estimate=None):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


class OracleUnreliableError(NumericalFailure):
    """The damped-integral extrapolation spread exceeds its trust threshold."""


class InconsistentRegimeError(UnruhCPError):
    """A numerically extracted power law contradicts the expected regime form."""
