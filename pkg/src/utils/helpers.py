"""
Helpers Module
Utility functions shared by the CLI and the tests
"""

import math
import time
from typing import List

import numpy as np

from core.errors import DomainError


# ============================================
# Math Utilities
# ============================================

def relative_difference(a: float, b: float) -> float:
    """|a - b| / max(|a|, |b|), 0 when both vanish"""
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0.0 else 0.0


def distance_grid(l_min: float, l_max: float, points: int, spacing: str = "log") -> List[float]:
    """Distances from l_min to l_max inclusive, log or linear spaced"""
    if spacing == "log":
        if not 0.0 < l_min:
            raise DomainError("log spacing needs l_min > 0")
        grid = np.geomspace(l_min, l_max, points)
    elif spacing == "linear":
        grid = np.linspace(l_min, l_max, points)
    else:
        raise DomainError(f"unknown spacing {spacing!r}")
    # geomspace/linspace endpoints are exact; interior points are plain floats
    return [float(v) for v in grid]


def count_sign_changes(values) -> int:
    """Number of sign changes in a sequence, zeros skipped"""
    signs = [math.copysign(1.0, v) for v in values if v != 0.0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ============================================
# Timing
# ============================================

def format_time(seconds: float) -> str:
    """Format seconds to human-readable time"""
    if seconds < 60:
        return f"{seconds:.1f}s"
    elif seconds < 3600:
        minutes = int(seconds / 60)
        secs = seconds % 60
        return f"{minutes}m {secs:.0f}s"
    else:
        hours = int(seconds / 3600)
        minutes = int((seconds % 3600) / 60)
        return f"{hours}h {minutes}m"


class Timer:
    """Context manager for timing code blocks"""

    def __init__(self, name: str = "Operation"):
        self.name = name
        self.start_time = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start_time = time.time()
        return self

    def __exit__(self, *args):
        self.elapsed = time.time() - self.start_time

    def describe(self) -> str:
        return f"{self.name} took {format_time(self.elapsed)}"
