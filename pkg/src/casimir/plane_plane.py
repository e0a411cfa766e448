"""
Plane Plane Module
Electromagnetic Casimir pressure and free energy between two thick planar mirrors

All transverse integrals use the dimensionless round-trip exponent x = 2 kappa L.
The Matsubara term n covers x >= x_n = 2 n kappa1 L and is integrated in
s = x - x_n with the factor e^{-x_n} taken out, so every term keeps full
relative accuracy however small it is.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple

from config import Settings, default_settings, physics_config
from core.constants import HBAR, C, KB, require_distance
from core.errors import DomainError
from core.thermal import ThermalState
from materials.dielectric import (DielectricModel, DrudeModel, PlasmaModel, TabulatedModel,
                                  static_epsilon)
from numerics.integration import QuadResult, integrate_semi_infinite
from numerics.matsubara import primed_sum
from numerics.zeta import zeta
from scattering.cavity import loop_log
from scattering.fresnel import Polarization, fresnel_from_epsilon, fresnel_zero_frequency
from casimir.thermodynamics import (ThermoResult, check_first_law, distance_derivative,
                                    temperature_derivative)
from utils.logger import get_logger

logger = get_logger(__name__)

POLARIZATIONS = (Polarization.TE, Polarization.TM)
# e^{-x_n} underflows beyond this
UNDERFLOW_EXPONENT = 700.0


@dataclass(frozen=True)
class PlaneCavity:
    """Two half-spaces of given materials a distance L apart"""
    material1: DielectricModel
    material2: DielectricModel
    L: float

    def __post_init__(self):
        require_distance(self.L)

    def with_distance(self, L: float) -> 'PlaneCavity':
        return PlaneCavity(self.material1, self.material2, L)


class PolarizationSplit(NamedTuple):
    TE: float
    TM: float


@dataclass(frozen=True)
class PressureResult:
    """Signed pressure (negative is attractive) with its polarization split"""
    P: float  # Pa
    eta_P: float
    per_polarization: PolarizationSplit
    n_matsubara: int
    error_estimate: float  # Pa
    path: str = "matsubara"

    def to_dict(self) -> Dict[str, float]:
        return {'P_Pa': self.P, 'eta_P': self.eta_P, 'P_TE_Pa': self.per_polarization.TE,
                'P_TM_Pa': self.per_polarization.TM, 'err_est': self.error_estimate,
                'n_terms': self.n_matsubara, 'path': self.path}


class _Kernel(Enum):
    PRESSURE = "pressure"  # x^2 f(x)
    FREE_ENERGY = "free_energy"  # x ln(1 - r e^{-x})


# ============================================
# Ideal mirrors at zero temperature
# ============================================

def ideal_pressure(L: float) -> float:
    """-hbar c pi^2 / (240 L^4)"""
    L = require_distance(L)
    return -HBAR * C * math.pi ** 2 / (240.0 * L ** 4)


def ideal_energy(L: float, A: float) -> float:
    """-hbar c pi^2 A / (720 L^3)"""
    if not A > 0.0:
        raise DomainError(f"area must be > 0, got A={A!r}")
    return A * ideal_free_energy_per_area(L)


def ideal_free_energy_per_area(L: float) -> float:
    L = require_distance(L)
    return -HBAR * C * math.pi ** 2 / (720.0 * L ** 3)


# ============================================
# Transverse integrals
# ============================================

def _reflection_product(cavity: PlaneCavity, eps: Optional[Tuple[float, float]],
                        p: Polarization, k: float, xi: float,
                        statics: Tuple[Optional[float], Optional[float]] = (None, None)) -> float:
    if eps is None:
        return (fresnel_zero_frequency(cavity.material1, p, k, statics[0])
                * fresnel_zero_frequency(cavity.material2, p, k, statics[1]))
    return fresnel_from_epsilon(eps[0], p, k, xi) * fresnel_from_epsilon(eps[1], p, k, xi)


def _scaled_kernel(kernel: _Kernel, r: float, xn: float, s: float) -> float:
    # kernel(x) * e^{x_n} at x = x_n + s
    x = xn + s
    if kernel is _Kernel.PRESSURE:
        return x * x * r * math.exp(-s) / ((1.0 - r) - r * math.expm1(-x))
    y = r * math.exp(-x)
    if abs(y) < 0.5:
        ratio = math.log1p(-y) / y if y != 0.0 else -1.0
        return x * ratio * r * math.exp(-s)
    return x * loop_log(r, x) * math.exp(xn)


def _epsilon_pair(cavity: PlaneCavity, xi: float) -> Optional[Tuple[float, float]]:
    if xi == 0.0:
        return None
    return cavity.material1.epsilon(xi), cavity.material2.epsilon(xi)


def _static_pair(cavity: PlaneCavity, p: Polarization) -> Tuple[Optional[float], Optional[float]]:
    """eps(0) of tail-less tabulated mirrors, needed only by the TM zero-frequency term"""
    if p is not Polarization.TM:
        return None, None
    return tuple(static_epsilon(m) if isinstance(m, TabulatedModel) and m.tail is None else None
                 for m in (cavity.material1, cavity.material2))


def _transverse_integral(cavity: PlaneCavity, xi: float, xn: float, p: Polarization,
                         kernel: _Kernel, settings: Settings) -> QuadResult:
    """e^{x_n} int_{x_n}^inf kernel(x) dx for one frequency and polarization"""
    L = cavity.L
    eps = _epsilon_pair(cavity, xi)
    statics = _static_pair(cavity, p) if eps is None else (None, None)

    def integrand(s: float) -> float:
        k = math.sqrt(s * (2.0 * xn + s)) / (2.0 * L)
        r = _reflection_product(cavity, eps, p, k, xi, statics)
        if r == 0.0:
            return 0.0
        return _scaled_kernel(kernel, r, xn, s)

    return integrate_semi_infinite(integrand, settings.quadrature)


def _matsubara_series(cavity: PlaneCavity, state: ThermalState, kernel: _Kernel,
                      settings: Settings):
    """sum'_n sum_p int_{x_n}^inf kernel dx, split by polarization"""
    tau = state.tau(cavity.L)
    per_term: Dict[int, Tuple[float, float, float]] = {}

    def term(n: int) -> float:
        xn = 2.0 * n * tau
        if xn > UNDERFLOW_EXPONENT:
            per_term[n] = (0.0, 0.0, 0.0)
            return 0.0
        xi = n * state.xi1
        scale = math.exp(-xn)
        te = _transverse_integral(cavity, xi, xn, Polarization.TE, kernel, settings)
        tm = _transverse_integral(cavity, xi, xn, Polarization.TM, kernel, settings)
        per_term[n] = (scale * te.value, scale * tm.value,
                       scale * (te.error_estimate + tm.error_estimate))
        return scale * (te.value + tm.value)

    result = primed_sum(term, settings.matsubara)
    weights = {n: (0.5 if n == 0 else 1.0) for n in per_term}
    te_total = math.fsum(weights[n] * v[0] for n, v in sorted(per_term.items()))
    tm_total = math.fsum(weights[n] * v[1] for n, v in sorted(per_term.items()))
    error = math.fsum(weights[n] * v[2] for n, v in sorted(per_term.items()))
    return result, PolarizationSplit(te_total, tm_total), error + result.tail_estimate


def _zero_temperature_integral(cavity: PlaneCavity, p: Polarization, kernel: _Kernel,
                               settings: Settings) -> QuadResult:
    """int_0^inf ds int_s^inf kernel(x) dx with s = 2 xi L / c"""
    L = cavity.L
    inner_error: List[float] = []

    def outer(s: float) -> float:
        xi = C * s / (2.0 * L)
        inner = _transverse_integral(cavity, xi, s, p, kernel, settings)
        inner_error.append(math.exp(-s) * inner.error_estimate)
        return math.exp(-s) * inner.value

    result = integrate_semi_infinite(outer, settings.quadrature)
    # the largest inner error bounds the error each outer node carries in
    worst_inner = max(inner_error) if inner_error else 0.0
    return QuadResult(result.value, result.error_estimate + worst_inner, result.evaluations)


# ============================================
# Pressure
# ============================================

def _require_positive_temperature(T: float) -> ThermalState:
    state = ThermalState(T)
    if state.is_zero:
        raise DomainError("Matsubara sums need T > 0; use the zero-temperature functions")
    return state


def pressure_plane_plane(cavity: PlaneCavity, T: float,
                         settings: Optional[Settings] = None) -> PressureResult:
    """
    Matsubara pressure
    P = -(kB T / 8 pi L^3) sum'_n sum_p int_{x_n}^inf x^2 r e^{-x}/(1 - r e^{-x}) dx

    The n = 0 term uses the zero-frequency reflection limits.

    Args:
        cavity: Materials and separation
        T: Temperature (K, > 0)
        settings: Numerical settings

    Returns:
        PressureResult
    """
    settings = settings or default_settings()
    state = _require_positive_temperature(T)
    L = cavity.L
    result, split, error = _matsubara_series(cavity, state, _Kernel.PRESSURE, settings)
    scale = -KB * T / (8.0 * math.pi * L ** 3)
    P = scale * result.value
    return PressureResult(P=P, eta_P=P / ideal_pressure(L),
                          per_polarization=PolarizationSplit(scale * split.TE, scale * split.TM),
                          n_matsubara=result.n_used, error_estimate=abs(scale) * error)


def pressure_zero_T(cavity: PlaneCavity, settings: Optional[Settings] = None) -> PressureResult:
    """
    Zero-temperature pressure
    P0 = -(hbar c / 32 pi^2 L^4) sum_p int_0^inf ds int_s^inf x^2 f_p dx
    """
    settings = settings or default_settings()
    L = cavity.L
    scale = -HBAR * C / (32.0 * math.pi ** 2 * L ** 4)
    parts = {p: _zero_temperature_integral(cavity, p, _Kernel.PRESSURE, settings)
             for p in POLARIZATIONS}
    te, tm = scale * parts[Polarization.TE].value, scale * parts[Polarization.TM].value
    P = te + tm
    error = abs(scale) * sum(part.error_estimate for part in parts.values())
    return PressureResult(P=P, eta_P=P / ideal_pressure(L), per_polarization=PolarizationSplit(te, tm),
                          n_matsubara=0, error_estimate=error, path="zero_T")


def pressure_high_T(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None) -> float:
    """
    Zeroth Matsubara term alone, -(kB T / 16 pi L^3) sum_p int_0^inf x^2 f_p(0) dx

    Equals -kB T zeta(3) / (8 pi L^3) for Drude mirrors and twice that for
    perfect mirrors.
    """
    settings = settings or default_settings()
    _require_positive_temperature(T)
    L = cavity.L
    total = math.fsum(_transverse_integral(cavity, 0.0, 0.0, p, _Kernel.PRESSURE, settings).value
                      for p in POLARIZATIONS)
    return -KB * T / (16.0 * math.pi * L ** 3) * total


def high_T_closed_form(L: float, T: float, polarizations: int = 1) -> float:
    """-polarizations * kB T zeta(3) / (8 pi L^3): 1 for Drude, 2 for perfect mirrors"""
    L = require_distance(L)
    return -polarizations * KB * T * zeta(3) / (8.0 * math.pi * L ** 3)


def _use_zero_T(cavity: PlaneCavity, state: ThermalState, tau_crossover: Optional[float]) -> bool:
    tau_crossover = physics_config.tau_crossover if tau_crossover is None else tau_crossover
    use = state.is_zero or state.tau(cavity.L) < tau_crossover
    logger.debug("plane-plane path at L=%.6e T=%.6e: %s", cavity.L, state.T,
                 "zero_T" if use else "matsubara")
    return use


def pressure(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None,
             tau_crossover: Optional[float] = None) -> PressureResult:
    """Pressure by the Matsubara sum, or the T = 0 integral below the crossover"""
    state = ThermalState(T)
    if _use_zero_T(cavity, state, tau_crossover):
        return pressure_zero_T(cavity, settings)
    return pressure_plane_plane(cavity, T, settings)


def eta_P(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None) -> float:
    """Reduction factor P / P_ideal(L)"""
    return pressure(cavity, T, settings).eta_P


# ============================================
# Free energy and thermodynamics
# ============================================

def free_energy_per_area(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None) -> float:
    """
    F/A = (kB T / 8 pi L^2) sum'_n sum_p int_{x_n}^inf x ln(1 - r e^{-x}) dx  (J/m^2)
    """
    settings = settings or default_settings()
    state = _require_positive_temperature(T)
    result, _, _ = _matsubara_series(cavity, state, _Kernel.FREE_ENERGY, settings)
    return KB * T / (8.0 * math.pi * cavity.L ** 2) * result.value


def free_energy_per_area_zero_T(cavity: PlaneCavity, settings: Optional[Settings] = None) -> float:
    """F0/A = (hbar c / 32 pi^2 L^3) sum_p int_0^inf ds int_s^inf x ln(1 - r e^{-x}) dx"""
    settings = settings or default_settings()
    total = math.fsum(_zero_temperature_integral(cavity, p, _Kernel.FREE_ENERGY, settings).value
                      for p in POLARIZATIONS)
    return HBAR * C / (32.0 * math.pi ** 2 * cavity.L ** 3) * total


def free_energy_per_area_auto(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None,
                              tau_crossover: Optional[float] = None) -> float:
    state = ThermalState(T)
    if _use_zero_T(cavity, state, tau_crossover):
        return free_energy_per_area_zero_T(cavity, settings)
    return free_energy_per_area(cavity, T, settings)


def entropy_per_area(cavity: PlaneCavity, T: float, settings: Optional[Settings] = None) -> float:
    """S/A = -d(F/A)/dT (J/(K m^2))"""
    settings = settings or default_settings()
    _require_positive_temperature(T)
    return -temperature_derivative(lambda t: free_energy_per_area(cavity, t, settings), T,
                                   settings.thermo)


def internal_energy_per_area(cavity: PlaneCavity, T: float,
                             settings: Optional[Settings] = None) -> float:
    """E/A = F/A + T S/A (J/m^2)"""
    return thermodynamics_3d(cavity, T, settings).internal_energy


def thermodynamics_3d(cavity: PlaneCavity, T: float,
                      settings: Optional[Settings] = None) -> ThermoResult:
    """Free energy, entropy and internal energy per unit area"""
    settings = settings or default_settings()
    free_energy = free_energy_per_area(cavity, T, settings)
    entropy = entropy_per_area(cavity, T, settings)
    if settings.thermo.debug_checks:
        # per unit area, -P plays the role of the force in dF = -P dL - S dT
        P = pressure_plane_plane(cavity, T, settings).P
        check_first_law(lambda L, t: free_energy_per_area(cavity.with_distance(L), t, settings),
                        P, entropy, cavity.L, T, settings.thermo)
    return ThermoResult(free_energy=free_energy, entropy=entropy,
                        internal_energy=free_energy + T * entropy, T=T, L=cavity.L)


def pressure_from_free_energy(cavity: PlaneCavity, T: float,
                              settings: Optional[Settings] = None) -> float:
    """-d(F/A)/dL by finite differences, the thermodynamic route to the pressure"""
    settings = settings or default_settings()
    return -distance_derivative(
        lambda L: free_energy_per_area(cavity.with_distance(L), T, settings),
        cavity.L, settings.thermo)


# ============================================
# Integrands at a single (xi, k)
# ============================================

def pressure_integrand(cavity: PlaneCavity, xi: float, k: float) -> float:
    """sum_p (k / 2 pi) 2 kappa r_p e^{-2 kappa L} / (1 - r_p e^{-2 kappa L}) for xi > 0"""
    kappa = math.hypot(k, xi / C)
    eps = _epsilon_pair(cavity, xi)
    if eps is None:
        raise DomainError("pressure_integrand needs xi > 0")
    x = 2.0 * kappa * cavity.L
    total = 0.0
    for p in POLARIZATIONS:
        r = _reflection_product(cavity, eps, p, k, xi)
        total += r * math.exp(-x) / (1.0 - r * math.exp(-x))
    return k / (2.0 * math.pi) * 2.0 * kappa * total


def lifshitz_integrand(material1: DielectricModel, material2: DielectricModel,
                       xi: float, k: float, L: float) -> float:
    """
    Same integrand written in terms of the permittivities, with p = c kappa / xi
    and s_j = sqrt(eps_j - 1 + p^2), for Drude or plasma media
    """
    def eps_of(model: DielectricModel) -> float:
        if isinstance(model, DrudeModel):
            return 1.0 + model.omega_p ** 2 / (xi * (xi + model.gamma))
        if isinstance(model, PlasmaModel):
            return 1.0 + model.omega_p ** 2 / xi ** 2
        raise DomainError(f"lifshitz_integrand supports Drude and plasma media, got {model.label}")

    e1, e2 = eps_of(material1), eps_of(material2)
    kappa = math.sqrt(k * k + (xi / C) ** 2)
    p = C * kappa / xi
    s1, s2 = math.sqrt(e1 - 1.0 + p * p), math.sqrt(e2 - 1.0 + p * p)
    growth = math.exp(2.0 * kappa * L)
    te = 1.0 / ((p + s1) * (p + s2) / ((p - s1) * (p - s2)) * growth - 1.0)
    tm = 1.0 / ((e1 * p + s1) * (e2 * p + s2) / ((e1 * p - s1) * (e2 * p - s2)) * growth - 1.0)
    return k * kappa / math.pi * (te + tm)
