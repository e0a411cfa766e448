"""
Dielectric Module
Perfect, plasma, Drude and tabulated mirror models evaluated at imaginary frequency
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from config import dielectric_config
from core.constants import C
from core.errors import DomainError, LosslessModelError
from materials.optical_data import OpticalDataTable, epsilon_from_table

# returned at xi = 0 (and for perfect mirrors) in place of a divergent permittivity
DIVERGENT = math.inf


class DielectricModel(ABC):
    """Optical response evaluable on the positive imaginary frequency axis"""

    @abstractmethod
    def epsilon(self, xi: float) -> float:
        """Permittivity eps(i xi) for xi > 0"""

    @property
    @abstractmethod
    def label(self) -> str:
        """Short human-readable description"""


@dataclass(frozen=True)
class PerfectConductor(DielectricModel):
    """Ideal mirror, the eps -> infinity limit"""

    def epsilon(self, xi: float) -> float:
        return DIVERGENT

    @property
    def label(self) -> str:
        return "perfect"


@dataclass(frozen=True)
class Vacuum(DielectricModel):
    """eps = 1 everywhere, i.e. no mirror at all"""

    def epsilon(self, xi: float) -> float:
        return 1.0

    @property
    def label(self) -> str:
        return "vacuum"


@dataclass(frozen=True)
class PlasmaModel(DielectricModel):
    """Lossless plasma of conduction electrons"""
    omega_p: float

    def __post_init__(self):
        if not (math.isfinite(self.omega_p) and self.omega_p > 0.0):
            raise DomainError(f"plasma frequency must be > 0, got {self.omega_p!r}")

    def epsilon(self, xi: float) -> float:
        return 1.0 + self.omega_p ** 2 / (xi * xi)

    @property
    def plasma_wavenumber(self) -> float:
        return self.omega_p / C

    @property
    def label(self) -> str:
        return f"plasma(omega_p={self.omega_p:.6e})"


@dataclass(frozen=True)
class DrudeModel(DielectricModel):
    """Dissipative Drude conductivity; gamma = 0 reduces to the plasma model"""
    omega_p: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.omega_p) and self.omega_p > 0.0):
            raise DomainError(f"plasma frequency must be > 0, got {self.omega_p!r}")
        if not (math.isfinite(self.gamma) and self.gamma >= 0.0):
            raise DomainError(f"relaxation rate must be >= 0, got {self.gamma!r}")

    def epsilon(self, xi: float) -> float:
        return 1.0 + self.omega_p ** 2 / (xi * (xi + self.gamma))

    def epsilon_imag_part(self, omega: float) -> float:
        """eps''(omega) on the real axis"""
        return self.omega_p ** 2 * self.gamma / (omega * (omega ** 2 + self.gamma ** 2))

    @property
    def is_lossless(self) -> bool:
        return self.gamma == 0.0

    @property
    def plasma_wavenumber(self) -> float:
        return self.omega_p / C

    @property
    def label(self) -> str:
        return f"drude(omega_p={self.omega_p:.6e}, gamma={self.gamma:.6e})"


@dataclass(frozen=True)
class TabulatedModel(DielectricModel):
    """Tabulated eps''(omega) with an optional Drude extrapolation below the table"""
    table: OpticalDataTable
    tail: Optional[DrudeModel] = None
    high_frequency_exponent: Optional[float] = None  # None: dielectric config default

    def epsilon(self, xi: float) -> float:
        return epsilon_from_table(self.table, self.tail, xi,
                                  high_frequency_exponent=self.high_frequency_exponent)

    @property
    def label(self) -> str:
        tail = self.tail.label if self.tail is not None else "none"
        return f"tabulated({len(self.table)} rows, tail={tail})"


@dataclass(frozen=True)
class GoldDefaults:
    """Gold parameters: plasma wavelength 136 nm and gamma/omega_p = 0.004"""
    lambda_p: float = 136e-9
    gamma_ratio: float = 0.004

    @property
    def omega_p(self) -> float:
        return 2.0 * math.pi * C / self.lambda_p

    @property
    def gamma(self) -> float:
        return self.gamma_ratio * self.omega_p


def _gold(defaults: Optional[GoldDefaults]) -> GoldDefaults:
    if defaults is not None:
        return defaults
    return GoldDefaults(lambda_p=dielectric_config.gold_lambda_p,
                        gamma_ratio=dielectric_config.gold_gamma_ratio)


def gold_drude(defaults: Optional[GoldDefaults] = None) -> DrudeModel:
    gold = _gold(defaults)
    return DrudeModel(omega_p=gold.omega_p, gamma=gold.gamma)


def gold_plasma(defaults: Optional[GoldDefaults] = None) -> PlasmaModel:
    return PlasmaModel(omega_p=_gold(defaults).omega_p)


def epsilon_imag_axis(model: DielectricModel, xi: float) -> float:
    """
    Permittivity eps(i xi) of a mirror model

    Args:
        model: Dielectric model
        xi: Imaginary frequency (rad/s, >= 0)

    Returns:
        eps(i xi) >= 1; `math.inf` for perfect mirrors and for conductors
        at xi = 0, which the reflection module resolves by closed-form limits
    """
    if not xi >= 0.0:
        raise DomainError(f"imaginary frequency must be >= 0, got xi={xi!r}")
    if xi == 0.0:
        return static_epsilon(model)
    return model.epsilon(xi)


def static_epsilon(model: DielectricModel) -> float:
    """xi -> 0 value of eps(i xi); infinite for conductors"""
    if isinstance(model, Vacuum):
        return 1.0
    if isinstance(model, TabulatedModel) and model.tail is None:
        return epsilon_from_table(model.table, None, 0.0,
                                  high_frequency_exponent=model.high_frequency_exponent,
                                  allow_static=True)
    return DIVERGENT


def static_conductivity(model: DielectricModel) -> float:
    """
    Static conductivity sigma_0 = omega_p^2 / gamma in reduced units (rad/s)

    Raises:
        LosslessModelError: Plasma model or Drude with gamma = 0
        DomainError: Model without a Drude conduction term
    """
    if isinstance(model, TabulatedModel) and model.tail is not None:
        model = model.tail
    if isinstance(model, PlasmaModel) or (isinstance(model, DrudeModel) and model.is_lossless):
        raise LosslessModelError("lossless model has no finite static conductivity")
    if not isinstance(model, DrudeModel):
        raise DomainError(f"static conductivity is defined for Drude models, got {model.label}")
    return model.omega_p ** 2 / model.gamma
