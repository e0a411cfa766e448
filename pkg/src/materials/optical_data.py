"""
Optical Data Module
Tabulated eps''(omega) ingestion and the imaginary-axis dispersion transform

    eps(i xi) = 1 + (2/pi) int_0^inf omega eps''(omega) / (omega^2 + xi^2) d omega

Below the first tabulated frequency eps'' comes from a Drude tail (closed form),
inside the table it is interpolated log-log, above the last point it decays as
omega^-p.
"""

import io
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, BinaryIO, Optional, TextIO, Union

import numpy as np
import pandas as pd

from config import dielectric_config
from core.errors import DomainError, OpticalDataError
from numerics.integration import integrate_finite

if TYPE_CHECKING:
    from materials.dielectric import DrudeModel

OMEGA_COLUMN = 'omega_rad_s'
EPS_IMAG_COLUMN = 'eps_imag'
# relative |xi - gamma| below which the tail uses its xi -> gamma limit
TAIL_DEGENERACY = 1e-7


@dataclass(frozen=True, eq=False)
class OpticalDataTable:
    """Strictly increasing samples of (omega, eps'')"""
    omega: np.ndarray
    eps_imag: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        eps_imag = np.asarray(self.eps_imag, dtype=float)
        if omega.ndim != 1 or omega.shape != eps_imag.shape:
            raise OpticalDataError("omega and eps_imag must be 1-D arrays of equal length")
        if len(omega) < 2:
            raise OpticalDataError(f"at least 2 samples required, got {len(omega)}")
        for i, (w, e) in enumerate(zip(omega, eps_imag), start=1):
            if not (math.isfinite(w) and w > 0.0):
                raise OpticalDataError(f"omega must be finite and > 0, got {w!r}", row=i)
            if not (math.isfinite(e) and e >= 0.0):
                raise OpticalDataError(f"eps_imag must be finite and >= 0, got {e!r}", row=i)
            if i > 1 and not w > omega[i - 2]:
                raise OpticalDataError("omega must be strictly increasing", row=i)
        omega.setflags(write=False)
        eps_imag.setflags(write=False)
        object.__setattr__(self, 'omega', omega)
        object.__setattr__(self, 'eps_imag', eps_imag)

    def __len__(self) -> int:
        return len(self.omega)


def load_optical_data(source: Union[str, bytes, BinaryIO, TextIO]) -> OpticalDataTable:
    """
    Parse an optical data CSV

    The header must name `omega_rad_s` and `eps_imag`; an `eps_real` column
    is accepted and ignored. Lines starting with `#` are comments.

    Args:
        source: File path, raw bytes, or an open byte/text stream

    Returns:
        Validated OpticalDataTable

    Raises:
        OpticalDataError: Malformed file, with the 1-based data row when known
    """
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    try:
        frame = pd.read_csv(source, comment='#', encoding='utf-8', skipinitialspace=True,
                            dtype=str)
    except FileNotFoundError:
        raise OpticalDataError(f"optical data file not found: {source}")
    except pd.errors.EmptyDataError:
        raise OpticalDataError("optical data file is empty")
    except (pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise OpticalDataError(f"cannot parse optical data: {exc}")

    frame.columns = [str(name).strip() for name in frame.columns]
    missing = [name for name in (OMEGA_COLUMN, EPS_IMAG_COLUMN) if name not in frame.columns]
    if missing:
        raise OpticalDataError(f"missing column(s) {', '.join(missing)}; "
                               f"header must be '{OMEGA_COLUMN},{EPS_IMAG_COLUMN}'")

    columns = {}
    for name in (OMEGA_COLUMN, EPS_IMAG_COLUMN):
        raw = frame[name].str.strip()
        values = pd.to_numeric(raw, errors='coerce')
        bad = values.isna()
        if bad.any():
            row = int(np.flatnonzero(bad.to_numpy())[0]) + 1
            raise OpticalDataError(f"{name} is not a number: {raw.iloc[row - 1]!r}", row=row)
        columns[name] = values.to_numpy(dtype=float)

    return OpticalDataTable(omega=columns[OMEGA_COLUMN], eps_imag=columns[EPS_IMAG_COLUMN])


def synthetic_drude_table(omega_p: float, gamma: float, omega_min: float, omega_max: float,
                          points: int = 200) -> OpticalDataTable:
    """Log-spaced table of the analytic Drude eps''(omega) = omega_p^2 gamma / (omega (omega^2 + gamma^2))"""
    if points < 2 or not 0.0 < omega_min < omega_max:
        raise DomainError("need points >= 2 and 0 < omega_min < omega_max")
    omega = np.geomspace(omega_min, omega_max, int(points))
    eps_imag = omega_p ** 2 * gamma / (omega * (omega ** 2 + gamma ** 2))
    return OpticalDataTable(omega=omega, eps_imag=eps_imag)


def _drude_tail(tail: 'DrudeModel', omega0: float, xi: float) -> float:
    # int_0^omega0 omega eps''(omega) / (omega^2 + xi^2) d omega for the Drude eps''
    wp2, gamma = tail.omega_p ** 2, tail.gamma
    if gamma == 0.0:
        # all spectral weight sits at omega = 0
        return 0.5 * math.pi * wp2 / xi ** 2
    if abs(xi - gamma) <= TAIL_DEGENERACY * gamma:
        a = 0.5 * (xi + gamma)
        bracket = omega0 / (a * (a * a + omega0 ** 2)) + math.atan(omega0 / a) / a ** 2
        return wp2 * gamma * bracket / (2.0 * a)
    h_gamma = math.atan(omega0 / gamma) / gamma
    h_xi = math.atan(omega0 / xi) / xi
    return wp2 * gamma * (h_gamma - h_xi) / (xi ** 2 - gamma ** 2)


def _interpolated_eps(table: OpticalDataTable, nodes: np.ndarray):
    # Gauss-Legendre nodes mapped into every segment in u = ln(omega)
    u = np.log(table.omega)
    ua, ub = u[:-1, None], u[1:, None]
    ea, eb = table.eps_imag[:-1, None], table.eps_imag[1:, None]
    half = 0.5 * (ub - ua)
    u_nodes = 0.5 * (ua + ub) + half * nodes[None, :]
    s = (u_nodes - ua) / (ub - ua)
    positive = (ea > 0.0) & (eb > 0.0)
    with np.errstate(divide='ignore', invalid='ignore'):
        loglog = np.exp(np.log(np.where(positive, ea, 1.0))
                        + s * (np.log(np.where(positive, eb, 1.0))
                               - np.log(np.where(positive, ea, 1.0))))
    omega_nodes = np.exp(u_nodes)
    wa, wb = table.omega[:-1, None], table.omega[1:, None]
    linear = ea + (omega_nodes - wa) / (wb - wa) * (eb - ea)
    return omega_nodes, np.where(positive, loglog, linear), half


def epsilon_from_table(table: OpticalDataTable, tail: Optional['DrudeModel'], xi: float,
                       high_frequency_exponent: Optional[float] = None,
                       nodes_per_segment: Optional[int] = None,
                       allow_static: bool = False) -> float:
    """
    eps(i xi) from tabulated eps'' through the dispersion transform

    Args:
        table: Tabulated eps''(omega)
        tail: Drude model supplying eps'' below the first sample, or None
        xi: Imaginary frequency (rad/s, > 0)
        high_frequency_exponent: p in eps'' ~ omega^-p above the table
        nodes_per_segment: Gauss-Legendre nodes per table segment
        allow_static: Accept xi = 0 (finite only without a conduction tail)

    Returns:
        eps(i xi) >= 1
    """
    if not (xi > 0.0 or (allow_static and xi == 0.0)):
        raise DomainError(f"imaginary frequency must be > 0, got xi={xi!r}")
    p = dielectric_config.high_frequency_exponent if high_frequency_exponent is None \
        else float(high_frequency_exponent)
    n_nodes = dielectric_config.gauss_nodes_per_segment if nodes_per_segment is None \
        else int(nodes_per_segment)

    low = 0.0
    if tail is not None:
        if xi == 0.0:
            return math.inf
        low = _drude_tail(tail, float(table.omega[0]), xi)

    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    omega_nodes, eps_nodes, half = _interpolated_eps(table, nodes)
    # d omega = omega du
    integrand = omega_nodes ** 2 * eps_nodes / (omega_nodes ** 2 + xi ** 2)
    interior = math.fsum((half * integrand * weights[None, :]).ravel())

    high = 0.0
    eps_last, omega_last = float(table.eps_imag[-1]), float(table.omega[-1])
    if eps_last > 0.0:
        # t = omega_last / omega maps [omega_last, inf) onto (0, 1]
        w2 = omega_last ** 2

        def above(t: float) -> float:
            return w2 * t ** (p - 1.0) / (w2 + (xi * t) ** 2)

        high = eps_last * integrate_finite(above, 0.0, 1.0).value

    return 1.0 + (2.0 / math.pi) * (low + interior + high)
