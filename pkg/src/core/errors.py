"""
Errors Module
Exception hierarchy shared by every casimir-kit package
"""

from typing import Optional


class CasimirError(Exception):
    """Base class for all casimir-kit errors"""


class DomainError(CasimirError, ValueError):
    """An argument lies outside the domain of the operation"""


class ZeroFrequencyError(DomainError):
    """Fresnel amplitudes requested at xi <= 0; use the zero-frequency limits"""


class UnsupportedArgumentError(DomainError):
    """Argument value not supported by this implementation"""


class LosslessModelError(DomainError):
    """A lossless model has no finite static conductivity"""


class InstabilityError(DomainError):
    """Effective oscillator stiffness is not positive"""


class OpticalDataError(DomainError):
    """Optical data file failed parsing or validation"""

    def __init__(self, message: str, row: Optional[int] = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class ConfigurationError(CasimirError, ValueError):
    """Invalid configuration value"""


class ConvergenceError(CasimirError, RuntimeError):
    """A numerical engine did not reach the requested tolerance"""

    def __init__(self, message: str, value: float = float('nan'),
                 error_estimate: float = float('inf')):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class TruncationError(ConvergenceError):
    """Matsubara sum hit n_max before the stopping rule was met"""

    def __init__(self, message: str, partial: float, tail_estimate: float, n_used: int):
        super().__init__(message, value=partial, error_estimate=tail_estimate)
        self.partial = partial
        self.tail_estimate = tail_estimate
        self.n_used = n_used


class StepSizeError(CasimirError, ArithmeticError):
    """Finite-difference step leaves the physical domain"""


class ConsistencyError(CasimirError, RuntimeError):
    """Two independent evaluation paths disagree beyond tolerance"""

    def __init__(self, message: str, relative_difference: float):
        super().__init__(message)
        self.relative_difference = relative_difference


class UsageError(CasimirError):
    """Command-line usage error"""
