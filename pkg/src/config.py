"""
Configuration file for casimir-kit
Contains numerical tolerances, material defaults and output settings
"""

import os
from dataclasses import dataclass, field, asdict, fields
from typing import Any, Dict, Optional

import yaml

from core.errors import ConfigurationError

THREADS_ENV_VAR = "CASIMIR_KIT_THREADS"


def _require_unit_interval(name: str, value: float):
    if not 0.0 < value < 1.0:
        raise ConfigurationError(f"{name} must lie in (0, 1), got {value!r}")


def _require_positive(name: str, value: float):
    if not value > 0:
        raise ConfigurationError(f"{name} must be > 0, got {value!r}")


# ============================================
# NUMERICAL ENGINES
# ============================================

@dataclass
class MatsubaraSettings:
    """Stopping rule of the primed Matsubara sum"""
    rel_tol: float = 1e-10
    n_max: int = 1_000_000
    consecutive_small: int = 3  # successive small terms before stopping

    def __post_init__(self):
        _require_unit_interval("matsubara.rel_tol", self.rel_tol)
        if int(self.n_max) < 10:
            raise ConfigurationError(f"matsubara.n_max must be >= 10, got {self.n_max!r}")
        if int(self.consecutive_small) < 1:
            raise ConfigurationError("matsubara.consecutive_small must be >= 1")
        self.n_max = int(self.n_max)
        self.consecutive_small = int(self.consecutive_small)


@dataclass
class QuadratureSettings:
    """Adaptive Gauss-Kronrod quadrature settings"""
    rel_tol: float = 1e-10
    abs_tol: float = 1e-30  # in units of the integrand's result
    max_subdivisions: int = 200

    def __post_init__(self):
        _require_unit_interval("quadrature.rel_tol", self.rel_tol)
        _require_positive("quadrature.abs_tol", self.abs_tol)
        if int(self.max_subdivisions) < 1:
            raise ConfigurationError("quadrature.max_subdivisions must be >= 1")
        self.max_subdivisions = int(self.max_subdivisions)


@dataclass
class ThermoSettings:
    """Finite-difference steps for thermodynamic derivatives"""
    min_temperature_step: float = 1e-3  # K
    rel_temperature_step: float = 1e-4
    rel_distance_step: float = 1e-6
    debug_checks: bool = False  # verify dF = -P dL - S dT on every call

    def __post_init__(self):
        _require_positive("thermo.min_temperature_step", self.min_temperature_step)
        _require_unit_interval("thermo.rel_temperature_step", self.rel_temperature_step)
        _require_unit_interval("thermo.rel_distance_step", self.rel_distance_step)


@dataclass
class Settings:
    """Bundle handed to every observable as its `settings` argument"""
    matsubara: MatsubaraSettings = field(default_factory=MatsubaraSettings)
    quadrature: QuadratureSettings = field(default_factory=QuadratureSettings)
    thermo: ThermoSettings = field(default_factory=ThermoSettings)


# ============================================
# PHYSICS AND MATERIALS
# ============================================

@dataclass
class PhysicsConfig:
    """Path selection between Matsubara sums and zero-temperature integrals"""
    tau_crossover: float = 1e-3  # 2 pi kB T L / (hbar c)

    def __post_init__(self):
        _require_positive("physics.tau_crossover", self.tau_crossover)


@dataclass
class DielectricConfig:
    """Gold defaults and dispersion-transform parameters"""
    gold_lambda_p: float = 136e-9  # m
    gold_gamma_ratio: float = 0.004  # gamma / omega_p
    high_frequency_exponent: float = 3.0  # eps'' ~ omega^-p above the table
    gauss_nodes_per_segment: int = 16

    def __post_init__(self):
        _require_positive("dielectric.gold_lambda_p", self.gold_lambda_p)
        if self.gold_gamma_ratio < 0:
            raise ConfigurationError("dielectric.gold_gamma_ratio must be >= 0")
        if self.high_frequency_exponent <= 1.0:
            raise ConfigurationError("dielectric.high_frequency_exponent must be > 1")
        if int(self.gauss_nodes_per_segment) < 2:
            raise ConfigurationError("dielectric.gauss_nodes_per_segment must be >= 2")


@dataclass
class PFAConfig:
    """Proximity force approximation settings"""
    aspect_ratio_warning: float = 0.1  # warn when L/R exceeds this
    consistency_tol: float = 1e-5  # dual-path relative agreement
    distance_factor: float = 100.0  # L_max >= factor * L
    thermal_factor: float = 20.0  # L_max >= factor / kappa1

    def __post_init__(self):
        _require_positive("pfa.aspect_ratio_warning", self.aspect_ratio_warning)
        _require_unit_interval("pfa.consistency_tol", self.consistency_tol)
        _require_positive("pfa.distance_factor", self.distance_factor)
        _require_positive("pfa.thermal_factor", self.thermal_factor)


# ============================================
# OUTPUT AND LOGGING
# ============================================

def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}")
    if threads < 1:
        raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}")
    return threads


@dataclass
class OutputConfig:
    """CLI output settings"""
    float_format: str = "%.10e"
    threads: Optional[int] = None  # None: read CASIMIR_KIT_THREADS at use
    progress: bool = True

    def __post_init__(self):
        if self.threads is not None and int(self.threads) < 1:
            raise ConfigurationError(f"output.threads must be >= 1, got {self.threads!r}")

    def resolve_threads(self) -> int:
        if self.threads is not None:
            return int(self.threads)
        return _threads_from_env()


@dataclass
class LoggingConfig:
    """Logging configuration"""
    level: str = "WARNING"
    log_file: Optional[str] = None
    console: bool = True


# Global config instances
matsubara_settings = MatsubaraSettings()
quadrature_settings = QuadratureSettings()
thermo_settings = ThermoSettings()
physics_config = PhysicsConfig()
dielectric_config = DielectricConfig()
pfa_config = PFAConfig()
output_config = OutputConfig()
logging_config = LoggingConfig()

_SECTIONS = {
    'matsubara': matsubara_settings,
    'quadrature': quadrature_settings,
    'thermo': thermo_settings,
    'physics': physics_config,
    'dielectric': dielectric_config,
    'pfa': pfa_config,
    'output': output_config,
    'logging': logging_config,
}


def default_settings() -> Settings:
    """Build a Settings bundle from the current global instances"""
    return Settings(
        matsubara=MatsubaraSettings(**asdict(matsubara_settings)),
        quadrature=QuadratureSettings(**asdict(quadrature_settings)),
        thermo=ThermoSettings(**asdict(thermo_settings)),
    )


def get_config_dict() -> Dict[str, Any]:
    """Get all configuration as dictionary"""
    return {section: asdict(instance) for section, instance in _SECTIONS.items()}


def update_config_from_dict(config_dict: Dict[str, Any]):
    """
    Update configuration from dictionary

    Args:
        config_dict: Mapping of section name to a mapping of field overrides

    Raises:
        ConfigurationError: On unknown sections/fields or invalid values
    """
    validated = []
    for section, overrides in config_dict.items():
        if section not in _SECTIONS:
            raise ConfigurationError(f"unknown configuration section {section!r}")
        if not isinstance(overrides, dict):
            raise ConfigurationError(f"section {section!r} must be a mapping")
        current = _SECTIONS[section]
        known = {f.name for f in fields(current)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigurationError(
                f"unknown keys in section {section!r}: {', '.join(sorted(unknown))}")
        values = asdict(current)
        values.update(overrides)
        validated.append((current, type(current)(**values)))

    # nothing is applied unless every section validated
    for current, replacement in validated:
        for f in fields(current):
            setattr(current, f.name, getattr(replacement, f.name))


def reset_config():
    """Restore every global instance to its defaults"""
    for instance in _SECTIONS.values():
        defaults = type(instance)()
        for f in fields(instance):
            setattr(instance, f.name, getattr(defaults, f.name))


def load_config_file(path: str) -> Dict[str, Any]:
    """Load a YAML configuration file and apply it to the global instances"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except FileNotFoundError:
        raise ConfigurationError(f"configuration file not found: {path}")
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"invalid YAML in {path}: {exc}")
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a mapping at top level")
    update_config_from_dict(data)
    return data
