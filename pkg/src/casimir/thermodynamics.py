"""
Thermodynamics Module
Richardson-extrapolated finite differences for entropy and distance derivatives
"""

from dataclasses import dataclass
from typing import Callable, Optional

from config import ThermoSettings
from core.errors import StepSizeError
from utils.logger import get_logger

logger = get_logger(__name__)

# relative first-law mismatch tolerated before a debug-check warning
FIRST_LAW_TOLERANCE = 1e-4


@dataclass(frozen=True)
class ThermoResult:
    """Free energy, entropy and internal energy at one (L, T)"""
    free_energy: float
    entropy: float
    internal_energy: float
    T: float
    L: float

    def to_dict(self):
        return {'L_m': self.L, 'T_K': self.T, 'free_energy': self.free_energy,
                'entropy': self.entropy, 'internal_energy': self.internal_energy}


def temperature_step(T: float, thermo: ThermoSettings) -> float:
    """Base step max(min step, rel step * T); T - h must stay positive"""
    h = max(thermo.min_temperature_step, thermo.rel_temperature_step * T)
    if not T - h > 0.0:
        raise StepSizeError(f"temperature step {h:g} K leaves the domain at T={T:g} K")
    return h


def richardson_derivative(f: Callable[[float], float], x: float, h: float) -> float:
    """(4 D(h/2) - D(h)) / 3 with D the central difference"""
    def central(step: float) -> float:
        return (f(x + step) - f(x - step)) / (2.0 * step)

    return (4.0 * central(0.5 * h) - central(h)) / 3.0


def temperature_derivative(free_energy: Callable[[float], float], T: float,
                           thermo: Optional[ThermoSettings] = None) -> float:
    thermo = thermo or ThermoSettings()
    return richardson_derivative(free_energy, T, temperature_step(T, thermo))


def distance_derivative(energy: Callable[[float], float], L: float,
                        thermo: Optional[ThermoSettings] = None) -> float:
    thermo = thermo or ThermoSettings()
    return richardson_derivative(energy, L, thermo.rel_distance_step * L)


def check_first_law(free_energy: Callable[[float, float], float], force: float,
                    entropy: float, L: float, T: float, thermo: ThermoSettings) -> float:
    """
    Compare dF = -force dL - S dT on a diagonal stencil; logs a warning on mismatch

    Returns:
        Relative mismatch
    """
    hL = thermo.rel_distance_step * L
    hT = temperature_step(T, thermo)
    measured = free_energy(L + hL, T + hT) - free_energy(L - hL, T - hT)
    predicted = -2.0 * (force * hL + entropy * hT)
    scale = max(abs(2.0 * force * hL) + abs(2.0 * entropy * hT), abs(measured), 1e-300)
    mismatch = abs(measured - predicted) / scale
    if mismatch > FIRST_LAW_TOLERANCE:
        logger.warning("first-law check failed at L=%.6e T=%.6e: relative mismatch %.3e",
                       L, T, mismatch)
    else:
        logger.debug("first-law check at L=%.6e T=%.6e: relative mismatch %.3e", L, T, mismatch)
    return mismatch
