"""
Fresnel Module
Reflection amplitudes of a thick vacuum-medium interface on the imaginary axis

With kappa = sqrt(k^2 + xi^2/c^2) and K = sqrt(k^2 + eps xi^2/c^2):
    TE: (kappa - K) / (kappa + K)
    TM: (eps kappa - K) / (eps kappa + K)
Both are evaluated in a form free of cancellation as eps -> 1. A perfect
mirror gives (TE, TM) = (-1, +1).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.constants import C
from core.errors import DomainError, ZeroFrequencyError
from materials.dielectric import (DielectricModel, DrudeModel, PerfectConductor, PlasmaModel,
                                  TabulatedModel, Vacuum, static_epsilon)


class Polarization(Enum):
    """Electromagnetic polarization"""
    TE = "TE"
    TM = "TM"


@dataclass(frozen=True)
class Mode3D:
    """Transverse wave-vector k, imaginary frequency xi and polarization p"""
    k: float
    xi: float
    p: Polarization

    def __post_init__(self):
        if not (self.k >= 0.0 and self.xi >= 0.0):
            raise DomainError(f"mode needs k >= 0 and xi >= 0, got k={self.k!r}, xi={self.xi!r}")

    @property
    def kappa(self) -> float:
        return math.hypot(self.k, self.xi / C)


def fresnel_from_epsilon(eps: float, p: Polarization, k: float, xi: float) -> float:
    """Fresnel amplitude for a given permittivity eps(i xi); eps = inf is the perfect mirror"""
    if math.isinf(eps):
        return -1.0 if p is Polarization.TE else 1.0
    q2 = (xi / C) ** 2
    kappa = math.sqrt(k * k + q2)
    K = math.sqrt(k * k + eps * q2)
    if p is Polarization.TE:
        return -(eps - 1.0) * q2 / (kappa + K) ** 2
    return (eps - 1.0) * ((eps + 1.0) * k * k + eps * q2) / (eps * kappa + K) ** 2


def fresnel_imag_axis(model: DielectricModel, p: Polarization, k: float, xi: float) -> float:
    """
    Fresnel amplitude r^p(k, i xi) for xi > 0

    Args:
        model: Mirror material
        p: Polarization
        k: Transverse wave-vector (1/m, >= 0)
        xi: Imaginary frequency (rad/s, > 0)

    Raises:
        ZeroFrequencyError: xi <= 0, use fresnel_zero_frequency
    """
    if not xi > 0.0:
        raise ZeroFrequencyError(
            f"xi={xi!r}: use fresnel_zero_frequency for the zero-frequency limit")
    if not k >= 0.0:
        raise DomainError(f"transverse wave-vector must be >= 0, got k={k!r}")
    if isinstance(model, PerfectConductor):
        return -1.0 if p is Polarization.TE else 1.0
    return fresnel_from_epsilon(model.epsilon(xi), p, k, xi)


def _plasma_te(k: float, plasma_wavenumber: float) -> float:
    # (k - sqrt(k^2 + kp^2)) / (k + sqrt(k^2 + kp^2))
    K = math.hypot(k, plasma_wavenumber)
    return -plasma_wavenumber ** 2 / (k + K) ** 2


def fresnel_zero_frequency(model: DielectricModel, p: Polarization, k: float,
                           eps0: Optional[float] = None) -> float:
    """
    xi -> 0 limit of the Fresnel amplitudes at fixed k > 0

    Drude (gamma > 0): TE -> 0, TM -> 1. Plasma: TE keeps its k dependence,
    TM -> 1. Finite static permittivity eps0: TE -> 0, TM -> (eps0-1)/(eps0+1);
    callers integrating over k pass eps0 in to skip the dispersion transform.
    """
    if not k > 0.0:
        raise DomainError(f"zero-frequency amplitudes need k > 0, got k={k!r}")
    if isinstance(model, PerfectConductor):
        return -1.0 if p is Polarization.TE else 1.0
    if isinstance(model, Vacuum):
        return 0.0

    conductor = model
    if isinstance(model, TabulatedModel):
        if model.tail is None:
            if p is Polarization.TE:
                return 0.0
            if eps0 is None:
                eps0 = static_epsilon(model)
            return (eps0 - 1.0) / (eps0 + 1.0)
        conductor = model.tail

    if p is Polarization.TM:
        return 1.0
    if isinstance(conductor, PlasmaModel) or (isinstance(conductor, DrudeModel)
                                              and conductor.is_lossless):
        return _plasma_te(k, conductor.plasma_wavenumber)
    if isinstance(conductor, DrudeModel):
        return 0.0
    raise DomainError(f"no zero-frequency limit known for {model.label}")


def fresnel_for_mode(model: DielectricModel, mode: Mode3D) -> float:
    """Dispatch to the finite or zero-frequency amplitude"""
    if mode.xi == 0.0:
        return fresnel_zero_frequency(model, mode.p, mode.k)
    return fresnel_imag_axis(model, mode.p, mode.k, mode.xi)
