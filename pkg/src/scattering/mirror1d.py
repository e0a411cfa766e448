"""
Mirror1D Module
Scalar mirrors on a line: perfect, transparent, and a localized impedance mismatch
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from core.constants import C
from core.errors import DomainError


class MirrorKind(Enum):
    """Enumeration of 1D mirror models"""
    PERFECT = "perfect"
    IMPEDANCE_MISMATCH = "impedance_mismatch"
    TRANSPARENT = "transparent"


@dataclass(frozen=True)
class Mirror1D:
    """A mirror at position q; Omega is the reflection cutoff of the impedance mismatch"""
    kind: MirrorKind
    Omega: Optional[float] = None  # rad/s
    q: float = 0.0  # m

    def __post_init__(self):
        if self.kind is MirrorKind.IMPEDANCE_MISMATCH:
            if self.Omega is None or not (math.isfinite(self.Omega) and self.Omega > 0.0):
                raise DomainError(f"impedance mismatch needs Omega > 0, got {self.Omega!r}")
        elif self.Omega is not None:
            raise DomainError(f"{self.kind.value} mirror takes no Omega")

    @classmethod
    def perfect(cls, q: float = 0.0) -> 'Mirror1D':
        return cls(MirrorKind.PERFECT, q=q)

    @classmethod
    def impedance_mismatch(cls, Omega: float, q: float = 0.0) -> 'Mirror1D':
        return cls(MirrorKind.IMPEDANCE_MISMATCH, Omega=Omega, q=q)

    @classmethod
    def transparent(cls, q: float = 0.0) -> 'Mirror1D':
        return cls(MirrorKind.TRANSPARENT, q=q)

    @property
    def penetration_length(self) -> float:
        """c/Omega: slope of r(i xi) at xi = 0 (0 for perfect, inf for transparent)"""
        if self.kind is MirrorKind.PERFECT:
            return 0.0
        if self.kind is MirrorKind.TRANSPARENT:
            return math.inf
        return C / self.Omega

    def reflection_imag_axis(self, xi: float) -> float:
        """Real amplitude r(i xi) for xi >= 0"""
        if self.kind is MirrorKind.PERFECT:
            return -1.0
        if self.kind is MirrorKind.TRANSPARENT:
            return 0.0
        return -self.Omega / (xi + self.Omega)

    @property
    def label(self) -> str:
        if self.kind is MirrorKind.IMPEDANCE_MISMATCH:
            return f"omega:{self.Omega:.6e}"
        return self.kind.value


def mirror1d_amplitudes(m: Mirror1D, omega: complex) -> Tuple[complex, complex]:
    """
    Reflection and transmission amplitudes (r, t) of a mirror located at x = 0

    Args:
        m: Mirror
        omega: Complex frequency in the closed upper half-plane (rad/s)

    Returns:
        (r, t) with r = Omega/(i omega - Omega), t = i omega/(i omega - Omega)
    """
    omega = complex(omega)
    if omega.imag < 0.0:
        raise DomainError(f"amplitudes are defined in the upper half-plane only, got omega={omega}")
    if m.kind is MirrorKind.PERFECT:
        return complex(-1.0), complex(0.0)
    if m.kind is MirrorKind.TRANSPARENT:
        return complex(0.0), complex(1.0)
    denominator = 1j * omega - m.Omega
    return m.Omega / denominator, 1j * omega / denominator
