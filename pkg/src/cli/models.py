"""
Models Module
Parsing of material and mirror aliases given on the command line

Materials: perfect, vacuum, plasma-gold, drude-gold, drude:OMEGA_P,GAMMA,
plasma:OMEGA_P, tabulated:PATH[,drude-tail:OMEGA_P,GAMMA].
Mirrors (1D): perfect, transparent, omega:OMEGA.
Frequencies are rad/s unless `ev` is set, in which case they are photon
energies in eV.
"""

from typing import List

from core.constants import ev_to_rad_per_s
from core.errors import UsageError
from materials.dielectric import (DielectricModel, DrudeModel, PerfectConductor, PlasmaModel,
                                  TabulatedModel, Vacuum, gold_drude, gold_plasma)
from materials.optical_data import load_optical_data
from scattering.mirror1d import Mirror1D

MATERIAL_ALIASES = ('perfect', 'vacuum', 'plasma-gold', 'drude-gold')
TAIL_PREFIX = 'drude-tail:'


def _frequencies(text: str, count: int, spec: str, ev: bool) -> List[float]:
    parts = [part.strip() for part in text.split(',')]
    if len(parts) != count or any(part == '' for part in parts):
        raise UsageError(f"{spec!r}: expected {count} comma-separated number(s)")
    try:
        values = [float(part) for part in parts]
    except ValueError:
        raise UsageError(f"{spec!r}: not a number")
    return [ev_to_rad_per_s(v) for v in values] if ev else values


def parse_material(spec: str, ev: bool = False) -> DielectricModel:
    """
    Build a dielectric model from its command-line alias

    Raises:
        UsageError: Unknown alias or malformed numbers
        DomainError: Parameters outside the model's domain
    """
    spec = spec.strip()
    name, _, rest = spec.partition(':')
    name = name.lower()
    if name == 'perfect' and not rest:
        return PerfectConductor()
    if name == 'vacuum' and not rest:
        return Vacuum()
    if name == 'plasma-gold' and not rest:
        return gold_plasma()
    if name == 'drude-gold' and not rest:
        return gold_drude()
    if name == 'drude':
        omega_p, gamma = _frequencies(rest, 2, spec, ev)
        return DrudeModel(omega_p=omega_p, gamma=gamma)
    if name == 'plasma':
        (omega_p,) = _frequencies(rest, 1, spec, ev)
        return PlasmaModel(omega_p=omega_p)
    if name == 'tabulated':
        path, tail = rest, None
        marker = rest.find(',' + TAIL_PREFIX)
        if marker >= 0:
            path = rest[:marker]
            omega_p, gamma = _frequencies(rest[marker + 1 + len(TAIL_PREFIX):], 2, spec, ev)
            tail = DrudeModel(omega_p=omega_p, gamma=gamma)
        if not path:
            raise UsageError(f"{spec!r}: missing optical data path")
        return TabulatedModel(table=load_optical_data(path), tail=tail)
    raise UsageError(f"unknown material {spec!r}; expected one of "
                     f"{', '.join(MATERIAL_ALIASES)}, drude:WP,G, plasma:WP, tabulated:PATH")


def parse_mirror(spec: str, ev: bool = False) -> Mirror1D:
    """Build a 1D mirror from its alias"""
    spec = spec.strip()
    name, _, rest = spec.partition(':')
    name = name.lower()
    if name == 'perfect' and not rest:
        return Mirror1D.perfect()
    if name == 'transparent' and not rest:
        return Mirror1D.transparent()
    if name == 'omega':
        (omega,) = _frequencies(rest, 1, spec, ev)
        return Mirror1D.impedance_mismatch(omega)
    raise UsageError(f"unknown mirror {spec!r}; expected perfect, transparent or omega:VALUE")
