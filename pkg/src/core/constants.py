"""
Constants Module
CODATA 2018 constants and separation validation.
All quantities are SI; angular frequencies are in rad/s.
"""

import math
from dataclasses import dataclass

from core.errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    """Pinned physical constants (never read from the environment)"""
    hbar: float = 1.054571817e-34  # J s
    c: float = 2.99792458e8  # m/s
    kB: float = 1.380649e-23  # J/K
    e: float = 1.602176634e-19  # C


CONSTANTS = PhysicalConstants()

HBAR = CONSTANTS.hbar
C = CONSTANTS.c
KB = CONSTANTS.kB
ELEMENTARY_CHARGE = CONSTANTS.e


@dataclass(frozen=True)
class Distance:
    """Mirror separation L in meters"""
    L: float

    def __post_init__(self):
        if not math.isfinite(self.L) or self.L <= 0.0:
            raise DomainError(f"separation must be finite and > 0, got L={self.L!r}")

    def __float__(self) -> float:
        return float(self.L)


def require_distance(L: float, name: str = "L") -> float:
    """Validate a separation and return it as float"""
    L = float(L)
    if not math.isfinite(L) or L <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {L!r}")
    return L


def ev_to_rad_per_s(energy_ev: float) -> float:
    """Convert a photon energy in eV to an angular frequency in rad/s"""
    return energy_ev * ELEMENTARY_CHARGE / HBAR
