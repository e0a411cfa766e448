"""
Cavity Module
Fabry-Perot cavity made of two mirrors: scattering, resonance and loop functions

Mirror 1 sits at q1 = -L/2 and mirror 2 at q2 = +L/2.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from core.constants import C, require_distance
from core.errors import DomainError
from scattering.mirror1d import Mirror1D, mirror1d_amplitudes

# |r| may exceed 1 by round-off only
UNIT_SLACK = 1e-12


@dataclass(frozen=True)
class CavityLoop:
    """Round trip of a cavity on the imaginary axis"""
    r_product: float
    kappa: float  # 1/m
    L: float  # m

    def __post_init__(self):
        if abs(self.r_product) > 1.0 + UNIT_SLACK:
            raise DomainError(f"|r1 r2| must be <= 1, got {self.r_product!r}")
        if not (self.kappa > 0.0 and self.L > 0.0):
            raise DomainError("loop needs kappa > 0 and L > 0")

    @property
    def x(self) -> float:
        """Round-trip exponent 2 kappa L"""
        return 2.0 * self.kappa * self.L

    @property
    def f(self) -> float:
        return loop_f(self.r_product, self.kappa, self.L)

    @property
    def log_denominator(self) -> float:
        return loop_log(self.r_product, self.x)


def loop_f(r_product: float, kappa: float, L: float) -> float:
    """
    Loop function r e^{-2 kappa L} / (1 - r e^{-2 kappa L})

    Args:
        r_product: r1 r2 on the imaginary axis, |r| <= 1
        kappa: Imaginary longitudinal wave-vector (1/m, > 0)
        L: Separation (m, > 0)
    """
    if abs(r_product) > 1.0 + UNIT_SLACK:
        raise DomainError(f"|r1 r2| must be <= 1, got {r_product!r}")
    x = 2.0 * kappa * L
    if not x > 0.0:
        raise DomainError(f"loop needs kappa L > 0, got kappa={kappa!r}, L={L!r}")
    return loop_f_scaled(r_product, x)


def loop_f_scaled(r: float, x: float) -> float:
    """Loop function in terms of x = 2 kappa L; no validation, for inner loops"""
    if x > 700.0:
        return r * math.exp(-x)
    # e^x - r written without cancellation for r -> 1, x -> 0
    return r / (math.expm1(x) + (1.0 - r))


def loop_log(r: float, x: float) -> float:
    """ln(1 - r e^{-x}), accurate for r e^{-x} -> 0 and for r -> 1, x -> 0"""
    y = r * math.exp(-x)
    if abs(y) < 0.5:
        return math.log1p(-y)
    return math.log((1.0 - r) - r * math.expm1(-x))


def airy_g(r1: complex, r2: complex, omega: float, L: float) -> float:
    """
    Airy function (1 - |r|^2) / |1 - r e^{2 i omega L / c}|^2 with r = r1 r2

    Above 1 near cavity resonances, below 1 in between, 1 when r = 0.
    """
    r = complex(r1) * complex(r2)
    if abs(r) > 1.0 + UNIT_SLACK:
        raise DomainError(f"|r1 r2| > 1 describes gain, got |r|={abs(r)!r}")
    if not omega >= 0.0:
        raise DomainError(f"omega must be real and >= 0, got {omega!r}")
    d = 1.0 - r * cmath.exp(2j * omega * L / C)
    d2 = abs(d) ** 2
    numerator = 1.0 - abs(r) ** 2
    if d2 == 0.0:
        return math.inf
    return numerator / d2


def mirror_s_matrix(m: Mirror1D, omega: float) -> np.ndarray:
    """S-matrix of a mirror at position m.q, acting on (phi+, phi-)"""
    r, t = mirror1d_amplitudes(m, omega)
    k = omega / C
    return np.array([[t, r * cmath.exp(-2j * k * m.q)],
                     [r * cmath.exp(2j * k * m.q), t]], dtype=complex)


def _cavity_amplitudes(m1: Mirror1D, m2: Mirror1D, omega: float, L: float):
    L = require_distance(L)
    r1, t1 = mirror1d_amplitudes(m1, omega)
    r2, t2 = mirror1d_amplitudes(m2, omega)
    phase = cmath.exp(1j * omega * L / C)
    d = 1.0 - r1 * r2 * phase ** 2
    return r1, t1, r2, t2, phase, d


def cavity_s_matrix(m1: Mirror1D, m2: Mirror1D, omega: float, L: float) -> np.ndarray:
    """Global S-matrix of the cavity"""
    r1, t1, r2, t2, phase, d = _cavity_amplitudes(m1, m2, omega, L)
    return np.array([[t1 * t2, d * r2 / phase + t2 ** 2 * r1 * phase],
                     [d * r1 / phase + t1 ** 2 * r2 * phase, t1 * t2]], dtype=complex) / d


def resonance_matrix(m1: Mirror1D, m2: Mirror1D, omega: float, L: float) -> np.ndarray:
    """Resonance matrix R mapping the input fields onto the intracavity fields"""
    r1, t1, r2, t2, phase, d = _cavity_amplitudes(m1, m2, omega, L)
    return np.array([[t1, r1 * t2 * phase],
                     [r2 * t1 * phase, t2]], dtype=complex) / d


def q_matrix(m1: Mirror1D, m2: Mirror1D, omega: float, L: float) -> np.ndarray:
    """Q such that R R^dagger = I + Q + Q^dagger for lossless mirrors"""
    r1, t1, r2, t2, phase, d = _cavity_amplitudes(m1, m2, omega, L)
    r = r1 * r2
    return np.array([[r * phase ** 2, r1 * phase],
                     [r2 * phase, r * phase ** 2]], dtype=complex) / d


def det_identity_check(m1: Mirror1D, m2: Mirror1D, omega: float, L: float) -> float:
    """
    Residual |det S12 - det S1 det S2 d*/d|

    Args:
        m1, m2: Mirrors (placed at -L/2 and +L/2)
        omega: Real frequency (rad/s, > 0)
        L: Separation (m)
    """
    if not omega > 0.0:
        raise DomainError(f"omega must be real and > 0, got {omega!r}")
    L = require_distance(L)
    placed1 = Mirror1D(m1.kind, m1.Omega, q=-0.5 * L)
    placed2 = Mirror1D(m2.kind, m2.Omega, q=0.5 * L)
    *_, d = _cavity_amplitudes(placed1, placed2, omega, L)
    det_s12 = np.linalg.det(cavity_s_matrix(placed1, placed2, omega, L))
    det_s1 = np.linalg.det(mirror_s_matrix(placed1, omega))
    det_s2 = np.linalg.det(mirror_s_matrix(placed2, omega))
    return float(abs(det_s12 - det_s1 * det_s2 * d.conjugate() / d))
