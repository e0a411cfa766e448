"""
Sweep Module
Distance and temperature sweeps of any supported quantity, evaluated in parallel and emitted in order
"""

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from tqdm import tqdm

from config import Settings
from core.constants import require_distance
from core.errors import DomainError
from materials.dielectric import DielectricModel
from scattering.mirror1d import Mirror1D
from casimir import one_dimensional as c1d
from casimir import plane_plane as c3d
from casimir.pfa import PlaneSphereConfig, force_plane_sphere_pfa, gradient_plane_sphere_pfa
from utils.helpers import distance_grid

MAX_POINTS = 1_000_000

QUANTITIES = ('pressure', 'eta', 'force1d', 'free-energy', 'entropy', 'pfa-force',
              'pfa-gradient', 'spectral1d')


@dataclass(frozen=True)
class SweepSpec:
    """Distance grid and what to evaluate on it"""
    l_min: float
    l_max: float
    points: int
    spacing: str
    T: float
    quantity: str
    model1: Optional[DielectricModel] = None
    model2: Optional[DielectricModel] = None
    mirror1: Optional[Mirror1D] = None
    mirror2: Optional[Mirror1D] = None
    R: Optional[float] = None  # sphere radius for pfa quantities
    omega: Optional[float] = None  # real frequency for spectral1d
    dim: str = "3d"  # free-energy / entropy

    def __post_init__(self):
        if not 0.0 < self.l_min < self.l_max:
            raise DomainError(f"need 0 < lmin < lmax, got {self.l_min!r}, {self.l_max!r}")
        _check_targets(self)

    def distances(self) -> List[float]:
        return distance_grid(self.l_min, self.l_max, self.points, self.spacing)


@dataclass(frozen=True)
class TemperatureSweepSpec:
    """Temperature grid at one distance; same quantities as SweepSpec"""
    L: float
    t_min: float
    t_max: float
    points: int
    spacing: str
    quantity: str
    model1: Optional[DielectricModel] = None
    model2: Optional[DielectricModel] = None
    mirror1: Optional[Mirror1D] = None
    mirror2: Optional[Mirror1D] = None
    R: Optional[float] = None
    omega: Optional[float] = None
    dim: str = "3d"

    def __post_init__(self):
        require_distance(self.L)
        if not 0.0 <= self.t_min < self.t_max:
            raise DomainError(f"need 0 <= tmin < tmax, got {self.t_min!r}, {self.t_max!r}")
        if self.spacing == 'log' and self.t_min == 0.0:
            raise DomainError("log spacing needs tmin > 0")
        _check_targets(self)

    def temperatures(self) -> List[float]:
        return distance_grid(self.t_min, self.t_max, self.points, self.spacing)


def is_one_dimensional(quantity: str, dim: str = "3d") -> bool:
    """Whether the quantity is evaluated on a 1D cavity of two mirrors"""
    return quantity in ('force1d', 'spectral1d') or (
        quantity in ('free-energy', 'entropy') and dim == '1d')


def _check_targets(spec):
    if not 2 <= spec.points <= MAX_POINTS:
        raise DomainError(f"points must be in [2, {MAX_POINTS}], got {spec.points!r}")
    if spec.spacing not in ('log', 'linear'):
        raise DomainError(f"spacing must be log or linear, got {spec.spacing!r}")
    if spec.quantity not in QUANTITIES:
        raise DomainError(f"unknown quantity {spec.quantity!r}")
    if spec.dim not in ('1d', '3d'):
        raise DomainError(f"dim must be 1d or 3d, got {spec.dim!r}")
    one_dimensional = is_one_dimensional(spec.quantity, spec.dim)
    if one_dimensional and (spec.mirror1 is None or spec.mirror2 is None):
        raise DomainError(f"{spec.quantity} needs two 1D mirrors")
    if not one_dimensional and (spec.model1 is None or spec.model2 is None):
        raise DomainError(f"{spec.quantity} needs two materials")
    if spec.quantity.startswith('pfa') and spec.R is None:
        raise DomainError(f"{spec.quantity} needs the sphere radius R")
    if spec.quantity == 'spectral1d' and spec.omega is None:
        raise DomainError("spectral1d needs a frequency omega")


# value, error estimate, number of Matsubara terms
Evaluation = Tuple[float, float, int]


AnySweep = Union[SweepSpec, TemperatureSweepSpec]


def evaluate_point(spec: AnySweep, L: float, T: float, settings: Settings) -> Evaluation:
    """Evaluate spec.quantity at one (L, T)"""
    q = spec.quantity
    if q in ('pressure', 'eta'):
        result = c3d.pressure(c3d.PlaneCavity(spec.model1, spec.model2, L), T, settings)
        value = result.P if q == 'pressure' else result.eta_P
        error = result.error_estimate if q == 'pressure' else \
            abs(result.error_estimate / c3d.ideal_pressure(L))
        return value, error, result.n_matsubara
    if q == 'force1d':
        result = c1d.force_1d_auto(c1d.Cavity1D(spec.mirror1, spec.mirror2, L), T, settings)
        return result.F, result.tail_estimate, result.n_matsubara
    if q == 'spectral1d':
        cavity = c1d.Cavity1D(spec.mirror1, spec.mirror2, L)
        return c1d.spectral_density_1d(cavity, spec.omega), 0.0, 0
    if q in ('free-energy', 'entropy'):
        return _thermal_quantity(spec, L, T, settings), 0.0, 0
    cfg = PlaneSphereConfig(spec.R, L, spec.model1, spec.model2)
    if q == 'pfa-force':
        result = force_plane_sphere_pfa(cfg, T, settings)
        return result.force, abs(result.force) * result.relative_difference, 0
    return gradient_plane_sphere_pfa(cfg, T, settings), 0.0, 0


def _thermal_quantity(spec: AnySweep, L: float, T: float, settings: Settings) -> float:
    if spec.dim == '1d':
        cavity = c1d.Cavity1D(spec.mirror1, spec.mirror2, L)
        if spec.quantity == 'entropy':
            return c1d.entropy_1d(cavity, T, settings)
        if T == 0.0:
            return c1d.free_energy_1d_zero_T(cavity, settings)
        return c1d.free_energy_1d(cavity, T, settings)
    cavity = c3d.PlaneCavity(spec.model1, spec.model2, L)
    if spec.quantity == 'entropy':
        return c3d.entropy_per_area(cavity, T, settings)
    return c3d.free_energy_per_area_auto(cavity, T, settings)


def parallel_map(function: Callable[[float], Dict], items: List[float], threads: int = 1,
                 progress: bool = False, description: str = "") -> List[Dict]:
    """Map over items with a thread pool; results come back in input order"""
    bar = tqdm(total=len(items), desc=description, disable=not progress, file=sys.stderr,
               leave=False)
    try:
        if threads <= 1:
            rows = []
            for item in items:
                rows.append(function(item))
                bar.update(1)
            return rows

        def tracked(item: float) -> Dict:
            row = function(item)
            bar.update(1)
            return row

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(tracked, items))
    finally:
        bar.close()


def run_sweep(spec: SweepSpec, settings: Settings, threads: int = 1,
              progress: bool = False) -> List[Dict]:
    """
    Evaluate the sweep

    Returns:
        Rows {'L_m', <quantity>, 'err_est', 'n_terms'} in grid order
    """
    def row(L: float) -> Dict:
        value, error, n_terms = evaluate_point(spec, L, spec.T, settings)
        return {'L_m': L, spec.quantity: value, 'err_est': error, 'n_terms': n_terms}

    return parallel_map(row, spec.distances(), threads=threads, progress=progress,
                        description=spec.quantity)


def run_temperature_sweep(spec: TemperatureSweepSpec, settings: Settings, threads: int = 1,
                          progress: bool = False) -> List[Dict]:
    """
    Evaluate the sweep over temperatures at the fixed distance spec.L

    Returns:
        Rows {'T_K', 'L_m', <quantity>, 'err_est', 'n_terms'} in grid order
    """
    def row(T: float) -> Dict:
        value, error, n_terms = evaluate_point(spec, spec.L, T, settings)
        return {'T_K': T, 'L_m': spec.L, spec.quantity: value, 'err_est': error,
                'n_terms': n_terms}

    return parallel_map(row, spec.temperatures(), threads=threads, progress=progress,
                        description=spec.quantity)
