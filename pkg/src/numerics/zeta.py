"""
Zeta Module
Riemann zeta values needed by the closed-form Casimir limits
"""

import math

from scipy import special

from core.errors import UnsupportedArgumentError

ZETA_2 = math.pi ** 2 / 6.0
ZETA_4 = math.pi ** 4 / 90.0


def zeta(s: int) -> float:
    """
    Riemann zeta at s in {2, 3, 4}

    Args:
        s: Integer argument

    Returns:
        zeta(s); closed forms for the even values
    """
    if isinstance(s, bool) or s not in (2, 3, 4):
        raise UnsupportedArgumentError(f"zeta is only provided for s in {{2, 3, 4}}, got {s!r}")
    if s == 2:
        return ZETA_2
    if s == 4:
        return ZETA_4
    return float(special.zeta(3.0, 1.0))
