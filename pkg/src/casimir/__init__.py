"""
Casimir package
Forces and thermodynamics of 1D and plane-plane cavities, and the PFA plane-sphere geometry
"""

from casimir.thermodynamics import ThermoResult
from casimir.one_dimensional import (Cavity1D, Force1DResult, force_1d, force_1d_zero_T,
                                     force_1d_perfect, force_1d_auto, force_from_free_energy_1d,
                                     free_energy_1d, free_energy_1d_zero_T, entropy_1d,
                                     internal_energy_1d, thermodynamics_1d, spectral_density_1d)
from casimir.plane_plane import (PlaneCavity, PressureResult, ideal_pressure, ideal_energy,
                                 pressure_plane_plane, pressure_zero_T, pressure_high_T,
                                 high_T_closed_form, pressure, eta_P, free_energy_per_area,
                                 free_energy_per_area_zero_T, free_energy_per_area_auto,
                                 entropy_per_area, internal_energy_per_area, thermodynamics_3d,
                                 pressure_from_free_energy, lifshitz_integrand)
from casimir.pfa import (PlaneSphereConfig, OscillatorParams, PFAForceResult,
                         force_plane_sphere_pfa, gradient_plane_sphere_pfa,
                         sphere_plane_energy_pfa, frequency_shift)

__all__ = [
    'ThermoResult',
    'Cavity1D', 'Force1DResult', 'force_1d', 'force_1d_zero_T', 'force_1d_perfect',
    'force_1d_auto', 'force_from_free_energy_1d', 'free_energy_1d', 'free_energy_1d_zero_T',
    'entropy_1d', 'internal_energy_1d', 'thermodynamics_1d', 'spectral_density_1d',
    'PlaneCavity', 'PressureResult', 'ideal_pressure', 'ideal_energy', 'pressure_plane_plane',
    'pressure_zero_T', 'pressure_high_T', 'high_T_closed_form', 'pressure', 'eta_P',
    'free_energy_per_area', 'free_energy_per_area_zero_T', 'free_energy_per_area_auto',
    'entropy_per_area', 'internal_energy_per_area', 'thermodynamics_3d',
    'pressure_from_free_energy', 'lifshitz_integrand',
    'PlaneSphereConfig', 'OscillatorParams', 'PFAForceResult', 'force_plane_sphere_pfa',
    'gradient_plane_sphere_pfa', 'sphere_plane_energy_pfa', 'frequency_shift',
]
