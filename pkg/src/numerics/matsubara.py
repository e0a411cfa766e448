"""
Matsubara Module
Primed sums over Matsubara indices with geometric tail control
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

from config import MatsubaraSettings
from core.errors import TruncationError
from utils.logger import get_logger

logger = get_logger(__name__)

TAIL_RATIO_CAP = 0.99


@dataclass(frozen=True)
class MatsubaraResult:
    """Value of a primed sum plus truncation metadata"""
    value: float
    n_used: int
    tail_estimate: float


def _tail_estimate(terms: List[float]) -> float:
    if len(terms) < 2:
        return abs(terms[-1]) if terms else 0.0
    last, previous = terms[-1], terms[-2]
    if previous == 0.0:
        return 0.0 if last == 0.0 else abs(last)
    q = min(max(abs(last / previous), 0.0), TAIL_RATIO_CAP)
    return abs(last) * q / (1.0 - q)


def primed_sum(term: Callable[[int], float],
               settings: Optional[MatsubaraSettings] = None) -> MatsubaraResult:
    """
    Evaluate 1/2 term(0) + sum_{n>=1} term(n)

    Terms are requested in ascending n and accumulated with math.fsum, so the
    result is bit-identical for identical inputs. The loop stops once
    `consecutive_small` successive terms satisfy |term(n)| <= rel_tol |partial|.

    Args:
        term: Pure function of the Matsubara index
        settings: Stopping rule; defaults to MatsubaraSettings()

    Returns:
        MatsubaraResult(value, n_used, tail_estimate)

    Raises:
        TruncationError: n_max terms evaluated without meeting the stopping rule
    """
    settings = settings or MatsubaraSettings()
    terms = [0.5 * float(term(0))]
    partial = terms[0]
    small_run = 0

    n = 0
    while True:
        n += 1
        if n >= settings.n_max:
            partial = math.fsum(terms)
            tail = _tail_estimate(terms)
            raise TruncationError(
                f"Matsubara sum not converged after {n} terms "
                f"(partial={partial:.6e}, tail~{tail:.3e})",
                partial=partial, tail_estimate=tail, n_used=n)
        value = float(term(n))
        terms.append(value)
        partial += value
        if abs(value) <= settings.rel_tol * abs(partial):
            small_run += 1
            if small_run >= settings.consecutive_small:
                break
        else:
            small_run = 0

    total = math.fsum(terms)
    tail = _tail_estimate(terms)
    logger.debug("primed sum converged: n_used=%d value=%.6e tail=%.3e", n + 1, total, tail)
    return MatsubaraResult(value=total, n_used=n + 1, tail_estimate=tail)
