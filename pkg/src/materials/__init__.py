"""
Materials package
Dielectric response of mirror materials on the imaginary frequency axis
"""

from materials.dielectric import (DielectricModel, PerfectConductor, PlasmaModel, DrudeModel,
                                  TabulatedModel, Vacuum, GoldDefaults, gold_drude, gold_plasma,
                                  epsilon_imag_axis, static_conductivity, static_epsilon)
from materials.optical_data import (OpticalDataTable, load_optical_data, epsilon_from_table,
                                    synthetic_drude_table)

__all__ = [
    'DielectricModel', 'PerfectConductor', 'PlasmaModel', 'DrudeModel', 'TabulatedModel',
    'Vacuum', 'GoldDefaults', 'gold_drude', 'gold_plasma', 'epsilon_imag_axis',
    'static_conductivity', 'static_epsilon', 'OpticalDataTable', 'load_optical_data',
    'epsilon_from_table', 'synthetic_drude_table',
]
