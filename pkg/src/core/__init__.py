"""
Core package
Physical constants, thermal state and the shared error hierarchy
"""

from core.constants import (HBAR, C, KB, ELEMENTARY_CHARGE, PhysicalConstants,
                            CONSTANTS, Distance, ev_to_rad_per_s)
from core.thermal import (ThermalState, mean_photon_number, mean_energy_per_mode,
                          mean_energy_per_mode_coth)

__all__ = [
    'HBAR', 'C', 'KB', 'ELEMENTARY_CHARGE', 'PhysicalConstants', 'CONSTANTS',
    'Distance', 'ev_to_rad_per_s', 'ThermalState', 'mean_photon_number',
    'mean_energy_per_mode', 'mean_energy_per_mode_coth',
]
