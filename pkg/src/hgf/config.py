"""Configuration records for the special-function kernels."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SpecFunConfig:
    """Tolerances and switch thresholds for the elliptic-integral stack.

    agm_tol     relative tolerance for AGM convergence
    inv_tol     absolute tolerance accepted for the modulus inverse,
                scaled by max(1, y) for large targets
    max_iter    iteration cap for AGM and the inverse solver
    r_small     below this, mu(r) uses the log(4/r) asymptote
    r_near_one  above this, mu(r) uses the reflection identity
    """

    agm_tol: float = 1e-15
    inv_tol: float = 1e-12
    max_iter: int = 200
    r_small: float = 1e-8
    r_near_one: float = 1.0 - 1e-8

    def __post_init__(self):
        for name in ("agm_tol", "inv_tol"):
            v = getattr(self, name)
            if not (0.0 < v < 1e-3):
                raise ValueError(f"{name} must be in (0, 1e-3), got {v!r}")
        if self.max_iter < 16:
            raise ValueError(f"max_iter must be >= 16, got {self.max_iter!r}")
        if not (0.0 < self.r_small < self.r_near_one < 1.0):
            raise ValueError(
                "thresholds must satisfy 0 < r_small < r_near_one < 1, got "
                f"r_small={self.r_small!r}, r_near_one={self.r_near_one!r}"
            )


DEFAULT_CONFIG = SpecFunConfig()


@dataclass(frozen=True)
class DistortionParams:
    """Parameter pair (K, c) for the distortion theorem suites.

    K is the maximal dilatation (>= 1 on every theorem path); c is the
    metric constant (> 0, >= 1 wherever a theorem requires it).
    """

    K: float
    c: float

    def __post_init__(self):
        if not (math.isfinite(self.K) and self.K >= 1.0):
            raise ValueError(f"K must be finite and >= 1, got {self.K!r}")
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise ValueError(f"c must be finite and > 0, got {self.c!r}")
