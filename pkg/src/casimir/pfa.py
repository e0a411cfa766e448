"""
PFA Module
Proximity force approximation for a sphere in front of a plane, and the
frequency shift of a micro-oscillator carrying the sphere
"""

import math
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from config import Settings, default_settings, pfa_config
from core.constants import require_distance
from core.errors import ConsistencyError, DomainError, InstabilityError
from core.thermal import ThermalState
from materials.dielectric import DielectricModel
from numerics.integration import integrate_finite
from casimir.plane_plane import (PlaneCavity, free_energy_per_area_auto, pressure,
                                 pressure_high_T)
from utils.helpers import relative_difference
from utils.logger import get_logger

logger = get_logger(__name__)

# outer distance integrals are not asked for more than this many Matsubara tolerances
OUTER_TOLERANCE_FACTOR = 100.0


@dataclass(frozen=True)
class PlaneSphereConfig:
    """Sphere of radius R at closest distance L from a plane"""
    R: float
    L: float
    material_plane: DielectricModel
    material_sphere: DielectricModel

    def __post_init__(self):
        require_distance(self.R, "R")
        require_distance(self.L)

    @property
    def aspect_ratio(self) -> float:
        """x = L / R"""
        return self.L / self.R

    @property
    def valid(self) -> bool:
        return self.aspect_ratio <= pfa_config.aspect_ratio_warning

    def cavity(self, L: Optional[float] = None) -> PlaneCavity:
        return PlaneCavity(self.material_plane, self.material_sphere, self.L if L is None else L)

    def with_distance(self, L: float) -> 'PlaneSphereConfig':
        return PlaneSphereConfig(self.R, L, self.material_plane, self.material_sphere)


@dataclass(frozen=True)
class OscillatorParams:
    """Torsional oscillator: stiffness K0, moment of inertia I, lever arm b"""
    K0: float
    I: float
    b: float

    def __post_init__(self):
        for name in ('K0', 'I', 'b'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"oscillator {name} must be > 0, got {value!r}")

    @property
    def omega0_squared(self) -> float:
        return self.K0 / self.I


@dataclass(frozen=True)
class PFAForceResult:
    """PFA force with both evaluation paths"""
    force: float  # N, from 2 pi R F/A
    force_from_pressure: float  # N, from integrating the pressure
    relative_difference: float
    aspect_ratio: float
    valid: bool

    def to_dict(self) -> Dict[str, float]:
        return {'F_N': self.force, 'F_pressure_N': self.force_from_pressure,
                'rel_diff': self.relative_difference, 'aspect_ratio': self.aspect_ratio,
                'valid': self.valid}


def _warn_aspect_ratio(cfg: PlaneSphereConfig):
    if not cfg.valid:
        logger.warning("PFA used at L/R = %.3e above %.3e; R >> L is required",
                       cfg.aspect_ratio, pfa_config.aspect_ratio_warning)


def _upper_distance(cfg: PlaneSphereConfig, state: ThermalState) -> float:
    upper = pfa_config.distance_factor * cfg.L
    if not state.is_zero:
        upper = max(upper, pfa_config.thermal_factor / state.kappa1)
    return upper


def _log_distance_integral(cfg: PlaneSphereConfig, quantity, state: ThermalState,
                           settings: Settings) -> Tuple[float, float]:
    """int_L^Lmax quantity(l) dl over u = ln(l / L); returns (integral, Lmax)"""
    upper = _upper_distance(cfg, state)
    # the integrand is only as smooth as the Matsubara truncation allows
    quadrature = replace(settings.quadrature,
                         rel_tol=max(settings.quadrature.rel_tol,
                                     min(OUTER_TOLERANCE_FACTOR * settings.matsubara.rel_tol,
                                         pfa_config.consistency_tol)))

    def integrand(u: float) -> float:
        ell = cfg.L * math.exp(u)
        return quantity(ell) * ell

    value, _ = integrate_finite(integrand, 0.0, math.log(upper / cfg.L), quadrature)
    return value, upper


def force_plane_sphere_pfa(cfg: PlaneSphereConfig, T: float,
                           settings: Optional[Settings] = None) -> PFAForceResult:
    """
    F_PFA(L) = 2 pi R int_L^inf P(l) dl = 2 pi R F/A(L)

    The pressure integral runs to Lmax = max(100 L, 20 / kappa1) and adds
    the analytic remainder of a P ~ l^-3 (T > 0) or l^-4 (T = 0) tail.

    Raises:
        ConsistencyError: The two paths differ by more than the PFA tolerance
    """
    settings = settings or default_settings()
    state = ThermalState(T)
    _warn_aspect_ratio(cfg)
    R = cfg.R

    integral, upper = _log_distance_integral(
        cfg, lambda ell: pressure(cfg.cavity(ell), T, settings).P, state, settings)
    if state.is_zero:
        tail = pressure(cfg.cavity(upper), T, settings).P * upper / 3.0
    else:
        tail = pressure_high_T(cfg.cavity(upper), T, settings) * upper / 2.0
    from_pressure = 2.0 * math.pi * R * (integral + tail)
    from_free_energy = 2.0 * math.pi * R * free_energy_per_area_auto(cfg.cavity(), T, settings)

    difference = relative_difference(from_pressure, from_free_energy)
    logger.debug("PFA force at L=%.6e: paths differ by %.3e", cfg.L, difference)
    if difference > pfa_config.consistency_tol:
        raise ConsistencyError(
            f"PFA force paths disagree at L={cfg.L:.6e}: {from_free_energy:.10e} vs "
            f"{from_pressure:.10e} (relative {difference:.3e})", difference)
    return PFAForceResult(force=from_free_energy, force_from_pressure=from_pressure,
                          relative_difference=difference, aspect_ratio=cfg.aspect_ratio,
                          valid=cfg.valid)


def gradient_plane_sphere_pfa(cfg: PlaneSphereConfig, T: float,
                              settings: Optional[Settings] = None) -> float:
    """G_PFA = dF_PFA/dL = -2 pi R P(L) (N/m)"""
    _warn_aspect_ratio(cfg)
    return -2.0 * math.pi * cfg.R * pressure(cfg.cavity(), T, settings).P


def sphere_plane_energy_pfa(cfg: PlaneSphereConfig, T: float,
                            settings: Optional[Settings] = None) -> float:
    """E_PFA(L) = 2 pi R int_L^inf F/A(l) dl, so that F_PFA = -dE_PFA/dL (J)"""
    settings = settings or default_settings()
    state = ThermalState(T)
    _warn_aspect_ratio(cfg)
    integral, upper = _log_distance_integral(
        cfg, lambda ell: free_energy_per_area_auto(cfg.cavity(ell), T, settings), state, settings)
    # F/A ~ l^-3 at T = 0 and ~ l^-2 in the thermal regime
    tail_power = 3.0 if state.is_zero else 2.0
    tail = free_energy_per_area_auto(cfg.cavity(upper), T, settings) * upper / (tail_power - 1.0)
    return 2.0 * math.pi * cfg.R * (integral + tail)


def frequency_shift(osc: OscillatorParams, cfg: PlaneSphereConfig, T: float,
                    settings: Optional[Settings] = None) -> Tuple[float, float]:
    """
    Squared oscillator frequencies without and with the Casimir gradient

    omega^2 = omega0^2 + (b^2 / I) 2 pi R P(L), equivalently K = K0 - b^2 G

    Returns:
        (omega0^2, omega^2) in 1/s^2

    Raises:
        InstabilityError: K0 - b^2 G <= 0
    """
    G = gradient_plane_sphere_pfa(cfg, T, settings)
    stiffness = osc.K0 - osc.b ** 2 * G
    if not stiffness > 0.0:
        raise InstabilityError(
            f"effective stiffness K0 - b^2 G = {stiffness:.6e} is not positive; "
            f"the sphere snaps onto the plane")
    return osc.omega0_squared, stiffness / osc.I
