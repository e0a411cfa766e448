"""
Numerics package
Matsubara summation, adaptive quadrature and zeta values
"""

from numerics.matsubara import MatsubaraResult, primed_sum
from numerics.integration import QuadResult, integrate_semi_infinite, integrate_finite
from numerics.zeta import zeta

__all__ = ['MatsubaraResult', 'primed_sum', 'QuadResult', 'integrate_semi_infinite',
           'integrate_finite', 'zeta']
