"""
Thermal Module
Planck occupation numbers and the Matsubara grid of a temperature
"""

import math
from dataclasses import dataclass

from core.constants import HBAR, C, KB, require_distance
from core.errors import DomainError

# hbar*omega/kB*T above which the occupation underflows to exactly 0
OCCUPATION_CUTOFF = 700.0


@dataclass(frozen=True)
class ThermalState:
    """Temperature plus the Matsubara grid derived from it"""
    T: float

    def __post_init__(self):
        if not math.isfinite(self.T) or self.T < 0.0:
            raise DomainError(f"temperature must be finite and >= 0, got T={self.T!r}")

    @property
    def is_zero(self) -> bool:
        """True on the zero-temperature computational path"""
        return self.T == 0.0

    @property
    def xi1(self) -> float:
        """First Matsubara frequency 2 pi kB T / hbar (rad/s)"""
        return 2.0 * math.pi * KB * self.T / HBAR

    @property
    def kappa1(self) -> float:
        """First Matsubara wavenumber xi1 / c (1/m)"""
        return self.xi1 / C

    def matsubara_frequency(self, n: int) -> float:
        return n * self.xi1

    def matsubara_wavenumber(self, n: int) -> float:
        return n * self.kappa1

    def tau(self, L: float) -> float:
        """Crossover parameter 2 pi kB T L / (hbar c)"""
        return self.kappa1 * require_distance(L)


def mean_photon_number(omega: float, T: float) -> float:
    """
    Mean number of photons per mode, 1/(exp(hbar omega/kB T) - 1)

    Args:
        omega: Angular frequency (rad/s, > 0)
        T: Temperature (K, >= 0)

    Returns:
        Occupation number; 0 at T = 0 and beyond the underflow cutoff
    """
    if not omega > 0.0:
        raise DomainError(f"angular frequency must be > 0, got omega={omega!r}")
    if T < 0.0:
        raise DomainError(f"temperature must be >= 0, got T={T!r}")
    if T == 0.0:
        return 0.0
    x = HBAR * omega / (KB * T)
    if x > OCCUPATION_CUTOFF:
        return 0.0
    return 1.0 / math.expm1(x)


def mean_energy_per_mode(omega: float, T: float) -> float:
    """Mean energy per mode (1/2 + n) hbar omega, zero-point included"""
    return (0.5 + mean_photon_number(omega, T)) * HBAR * omega


def mean_energy_per_mode_coth(omega: float, T: float) -> float:
    """Same quantity written as (hbar omega/2) coth(hbar omega/2 kB T)"""
    if not omega > 0.0:
        raise DomainError(f"angular frequency must be > 0, got omega={omega!r}")
    if T < 0.0:
        raise DomainError(f"temperature must be >= 0, got T={T!r}")
    half = 0.5 * HBAR * omega
    if T == 0.0:
        return half
    y = half / (KB * T)
    if y > 0.5 * OCCUPATION_CUTOFF:
        return half
    return half / math.tanh(y)
