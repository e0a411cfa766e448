"""
Scattering package
Mirror reflection amplitudes, cavity matrices and loop functions
"""

from scattering.mirror1d import MirrorKind, Mirror1D, mirror1d_amplitudes
from scattering.fresnel import (Polarization, Mode3D, fresnel_imag_axis, fresnel_from_epsilon,
                                fresnel_zero_frequency, fresnel_for_mode)
from scattering.cavity import (CavityLoop, loop_f, loop_log, airy_g, mirror_s_matrix,
                               cavity_s_matrix, resonance_matrix, q_matrix, det_identity_check)

__all__ = [
    'MirrorKind', 'Mirror1D', 'mirror1d_amplitudes', 'Polarization', 'Mode3D',
    'fresnel_imag_axis', 'fresnel_from_epsilon', 'fresnel_zero_frequency', 'fresnel_for_mode',
    'CavityLoop', 'loop_f', 'loop_log', 'airy_g', 'mirror_s_matrix', 'cavity_s_matrix',
    'resonance_matrix', 'q_matrix', 'det_identity_check',
]
