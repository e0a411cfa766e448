"""
One Dimensional Module
Casimir force and thermodynamics of a scalar field between two mirrors on a line
"""

import math
from dataclasses import dataclass
from typing import Optional

from config import Settings, default_settings, physics_config
from core.constants import HBAR, C, KB, require_distance
from core.errors import DomainError
from core.thermal import ThermalState
from numerics.integration import integrate_semi_infinite
from numerics.matsubara import primed_sum
from scattering.cavity import airy_g, loop_f_scaled, loop_log
from scattering.mirror1d import Mirror1D, MirrorKind, mirror1d_amplitudes
from casimir.thermodynamics import (ThermoResult, check_first_law, distance_derivative,
                                    temperature_derivative)
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Cavity1D:
    """Two mirrors a distance L apart"""
    mirror1: Mirror1D
    mirror2: Mirror1D
    L: float

    def __post_init__(self):
        require_distance(self.L)

    def with_distance(self, L: float) -> 'Cavity1D':
        return Cavity1D(self.mirror1, self.mirror2, L)

    def r_product(self, xi: float) -> float:
        """r1 r2 at imaginary frequency i xi"""
        return self.mirror1.reflection_imag_axis(xi) * self.mirror2.reflection_imag_axis(xi)

    @property
    def is_decoupled(self) -> bool:
        """True when either mirror is transparent (r1 r2 = 0 at every frequency)"""
        return MirrorKind.TRANSPARENT in (self.mirror1.kind, self.mirror2.kind)

    @property
    def perfectly_reflecting_at_dc(self) -> bool:
        """True when r1 r2 = 1 at zero frequency"""
        return self.r_product(0.0) == 1.0

    @property
    def effective_length(self) -> float:
        """2L plus both penetration lengths"""
        return 2.0 * self.L + self.mirror1.penetration_length + self.mirror2.penetration_length


@dataclass(frozen=True)
class Force1DResult:
    """Force between the mirrors (negative is attractive)"""
    F: float  # N
    n_matsubara: int
    tail_estimate: float  # N
    path: str = "matsubara"

    def to_dict(self):
        return {'F_N': self.F, 'err_est': self.tail_estimate, 'n_terms': self.n_matsubara,
                'path': self.path}


def _require_positive_temperature(T: float) -> ThermalState:
    state = ThermalState(T)
    if state.is_zero:
        raise DomainError("Matsubara sums need T > 0; use the zero-temperature functions")
    return state


def force_1d(cavity: Cavity1D, T: float, settings: Optional[Settings] = None) -> Force1DResult:
    """
    Matsubara sum F = -2 kB T sum' kappa_n f(i xi_n)

    Args:
        cavity: Mirrors and separation
        T: Temperature (K, > 0)
        settings: Numerical settings

    Returns:
        Force1DResult
    """
    settings = settings or default_settings()
    state = _require_positive_temperature(T)
    L = cavity.L
    kappa1 = state.kappa1

    def term(n: int) -> float:
        if n == 0:
            # kappa f(kappa) -> 1/(2L + delta1 + delta2) when r(0) = 1, else 0
            return 1.0 / cavity.effective_length if cavity.perfectly_reflecting_at_dc else 0.0
        kappa = n * kappa1
        return kappa * loop_f_scaled(cavity.r_product(C * kappa), 2.0 * kappa * L)

    result = primed_sum(term, settings.matsubara)
    scale = -2.0 * KB * T
    return Force1DResult(F=scale * result.value, n_matsubara=result.n_used,
                         tail_estimate=abs(scale) * result.tail_estimate)


def force_1d_zero_T(cavity: Cavity1D, settings: Optional[Settings] = None) -> float:
    """
    F0 = -(hbar c / 4 pi L^2) int_0^inf x r / (e^x - r) dx with x = 2 kappa L

    Returns:
        Force in N
    """
    settings = settings or default_settings()
    L = cavity.L
    if cavity.is_decoupled:
        return 0.0

    def integrand(x: float) -> float:
        return x * loop_f_scaled(cavity.r_product(C * x / (2.0 * L)), x)

    value, _ = integrate_semi_infinite(integrand, settings.quadrature)
    return -HBAR * C / (4.0 * math.pi * L ** 2) * value


def force_1d_perfect(L: float) -> float:
    """Closed form -hbar c pi / (24 L^2)"""
    L = require_distance(L)
    return -HBAR * C * math.pi / (24.0 * L ** 2)


def force_1d_auto(cavity: Cavity1D, T: float, settings: Optional[Settings] = None,
                  tau_crossover: Optional[float] = None) -> Force1DResult:
    """Zero-temperature integral when 2 pi kB T L / hbar c is below the crossover, else Matsubara"""
    tau_crossover = physics_config.tau_crossover if tau_crossover is None else tau_crossover
    state = ThermalState(T)
    if state.is_zero or state.tau(cavity.L) < tau_crossover:
        logger.debug("force_1d: zero-temperature path (tau=%.3e)", state.tau(cavity.L))
        return Force1DResult(F=force_1d_zero_T(cavity, settings), n_matsubara=0,
                             tail_estimate=0.0, path="zero_T")
    return force_1d(cavity, T, settings)


def free_energy_1d(cavity: Cavity1D, T: float, settings: Optional[Settings] = None) -> float:
    """
    F = kB T sum' ln(1 - r(i xi_n) e^{-2 kappa_n L})

    For mirrors with r(0) = 1 the n = 0 logarithm diverges; it is replaced by
    ln(kappa1 (2L + delta1 + delta2) / 2 pi), which has the same L dependence
    and makes F tend to the zero-temperature energy as T -> 0.
    """
    settings = settings or default_settings()
    state = _require_positive_temperature(T)
    L = cavity.L
    kappa1 = state.kappa1

    def term(n: int) -> float:
        if n == 0:
            if cavity.perfectly_reflecting_at_dc:
                return math.log(kappa1 * cavity.effective_length / (2.0 * math.pi))
            return math.log1p(-cavity.r_product(0.0))
        kappa = n * kappa1
        return loop_log(cavity.r_product(C * kappa), 2.0 * kappa * L)

    result = primed_sum(term, settings.matsubara)
    return KB * T * result.value


def free_energy_1d_zero_T(cavity: Cavity1D, settings: Optional[Settings] = None) -> float:
    """E0 = (hbar c / 4 pi L) int_0^inf ln(1 - r e^{-x}) dx"""
    settings = settings or default_settings()
    L = cavity.L

    def integrand(x: float) -> float:
        return loop_log(cavity.r_product(C * x / (2.0 * L)), x)

    value, _ = integrate_semi_infinite(integrand, settings.quadrature)
    return HBAR * C / (4.0 * math.pi * L) * value


def entropy_1d(cavity: Cavity1D, T: float, settings: Optional[Settings] = None) -> float:
    """S = -dF/dT by Richardson-extrapolated central differences (J/K)"""
    settings = settings or default_settings()
    _require_positive_temperature(T)
    if cavity.is_decoupled:
        return 0.0
    return -temperature_derivative(lambda t: free_energy_1d(cavity, t, settings), T,
                                   settings.thermo)


def internal_energy_1d(cavity: Cavity1D, T: float, settings: Optional[Settings] = None) -> float:
    """E = F + T S (J)"""
    return thermodynamics_1d(cavity, T, settings).internal_energy


def thermodynamics_1d(cavity: Cavity1D, T: float,
                      settings: Optional[Settings] = None) -> ThermoResult:
    """Free energy, entropy and internal energy in one pass"""
    settings = settings or default_settings()
    free_energy = free_energy_1d(cavity, T, settings)
    entropy = entropy_1d(cavity, T, settings)
    if settings.thermo.debug_checks:
        force = force_1d(cavity, T, settings).F
        check_first_law(lambda L, t: free_energy_1d(cavity.with_distance(L), t, settings),
                        force, entropy, cavity.L, T, settings.thermo)
    return ThermoResult(free_energy=free_energy, entropy=entropy,
                        internal_energy=free_energy + T * entropy, T=T, L=cavity.L)


def force_from_free_energy_1d(cavity: Cavity1D, T: float,
                              settings: Optional[Settings] = None) -> float:
    """-dF/dL by finite differences, the thermodynamic route to the force"""
    settings = settings or default_settings()
    return -distance_derivative(lambda L: free_energy_1d(cavity.with_distance(L), T, settings),
                                cavity.L, settings.thermo)


def spectral_density_1d(cavity: Cavity1D, omega: float) -> float:
    """
    g(omega) - 1 at real frequency

    Positive near cavity resonances, negative between them. At omega = 0 with
    r(0) = 1 the 0/0 form is replaced by its limit (d1^2 + d2^2)/(2L + d1 + d2)^2.
    """
    if not omega >= 0.0:
        raise DomainError(f"omega must be >= 0, got {omega!r}")
    if omega == 0.0 and cavity.perfectly_reflecting_at_dc:
        d1 = cavity.mirror1.penetration_length
        d2 = cavity.mirror2.penetration_length
        return (d1 ** 2 + d2 ** 2) / cavity.effective_length ** 2 - 1.0
    r1, _ = mirror1d_amplitudes(cavity.mirror1, omega)
    r2, _ = mirror1d_amplitudes(cavity.mirror2, omega)
    return airy_g(r1, r2, omega, cavity.L) - 1.0
