"""Points, boundary distance, hyperbolic metrics, and the h_{D,c} metric.

Supported domains are the upper half plane ("half-plane") and the unit disk
("disk").  Points are coordinate pairs; plain ``(re, im)`` tuples and
``complex`` values are accepted anywhere a point is expected.

The hyperbolic distances are evaluated through their arsh forms, which
agree with the arch/ch definitions analytically but avoid cancellation for
nearby points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from hgf._backend import core as _C

__all__ = [
    "HALF_PLANE",
    "DISK",
    "HalfPlanePoint",
    "DiskPoint",
    "MobiusH",
    "boundary_dist",
    "rho_half_plane",
    "rho_disk",
    "h_metric",
    "h_from_rho",
    "mobius_apply",
    "stretch_map",
]

HALF_PLANE = "half-plane"
DISK = "disk"


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point of the upper half plane (im > 0)."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"coordinates must be finite, got ({self.re!r}, {self.im!r})")
        if self.im <= 0.0:
            raise ValueError(f"half-plane point needs im > 0, got im={self.im!r}")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk (re^2 + im^2 < 1)."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"coordinates must be finite, got ({self.re!r}, {self.im!r})")
        if self.re * self.re + self.im * self.im >= 1.0:
            raise ValueError(f"disk point needs |z| < 1, got ({self.re!r}, {self.im!r})")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class MobiusH:
    """Real-coefficient Mobius map z -> (a z + b)/(c z + d) with ad - bc > 0.

    Positive determinant makes it a self-map of the upper half plane.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not (math.isfinite(det) and det > 0.0):
            raise ValueError(f"need ad - bc > 0, got det={det!r}")


PointLike = Union[HalfPlanePoint, DiskPoint, complex, tuple]


def _coords(p: PointLike) -> tuple[float, float]:
    if isinstance(p, (HalfPlanePoint, DiskPoint)):
        return p.re, p.im
    if isinstance(p, complex):
        return p.real, p.imag
    re, im = p
    return float(re), float(im)


def _check_domain(dom: str) -> str:
    if dom not in (HALF_PLANE, DISK):
        raise ValueError(f"unknown domain {dom!r}; expected {HALF_PLANE!r} or {DISK!r}")
    return dom


def boundary_dist(dom: str, p: PointLike) -> float:
    """Distance from p to the domain boundary: im for the half plane, 1 - |p| for the disk."""
    _check_domain(dom)
    re, im = _coords(p)
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ValueError(f"coordinates must be finite, got ({re!r}, {im!r})")
    if dom == HALF_PLANE:
        if im <= 0.0:
            raise ValueError(f"point ({re!r}, {im!r}) is not in the upper half plane")
        return im
    d = 1.0 - math.sqrt(re * re + im * im)
    if d <= 0.0:
        raise ValueError(f"point ({re!r}, {im!r}) is not in the unit disk")
    return d


def rho_half_plane(x: PointLike, y: PointLike) -> float:
    """Hyperbolic distance of the upper half plane."""
    x1, y1 = _coords(x)
    x2, y2 = _coords(y)
    boundary_dist(HALF_PLANE, (x1, y1))
    boundary_dist(HALF_PLANE, (x2, y2))
    return _C.rho_half_plane(x1, y1, x2, y2)


def rho_disk(a: PointLike, b: PointLike) -> float:
    """Hyperbolic distance of the unit disk."""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    boundary_dist(DISK, (ax, ay))
    boundary_dist(DISK, (bx, by))
    return _C.rho_disk(ax, ay, bx, by)


def h_metric(dom: str, c: float, p: PointLike, q: PointLike) -> float:
    """Boundary-weighted metric log(1 + c |p-q| / sqrt(d(p) d(q))) on dom."""
    _check_domain(dom)
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"c must be finite and > 0, got {c!r}")
    px, py = _coords(p)
    qx, qy = _coords(q)
    boundary_dist(dom, (px, py))
    boundary_dist(dom, (qx, qy))
    if dom == HALF_PLANE:
        return _C.h_half_plane(c, px, py, qx, qy)
    return _C.h_disk(c, px, py, qx, qy)


def h_from_rho(c: float, rho: float) -> float:
    """Half-plane bridge: h = log(1 + 2 c sh(rho/2)) at hyperbolic distance rho."""
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"c must be finite and > 0, got {c!r}")
    if not (math.isfinite(rho) and rho >= 0.0):
        raise ValueError(f"rho must be finite and >= 0, got {rho!r}")
    return _C.h_from_rho(c, rho)


def mobius_apply(m: MobiusH, p: PointLike) -> HalfPlanePoint:
    """Apply a half-plane Mobius map to a half-plane point."""
    x, y = _coords(p)
    boundary_dist(HALF_PLANE, (x, y))
    u = m.c * x + m.d
    v = m.c * y
    den = u * u + v * v
    if den == 0.0:
        raise ValueError(f"Mobius denominator underflow at point ({x!r}, {y!r})")
    det = m.a * m.d - m.b * m.c
    re = ((m.a * x + m.b) * u + m.a * y * v) / den
    im = y * det / den
    return HalfPlanePoint(re, im)


def stretch_map(K: float, p: PointLike) -> HalfPlanePoint:
    """Radial stretch z -> z |z|^(K-1), the model K-quasiconformal self-map."""
    if not (math.isfinite(K) and K >= 1.0):
        raise ValueError(f"K must be finite and >= 1, got {K!r}")
    x, y = _coords(p)
    boundary_dist(HALF_PLANE, (x, y))
    m = math.sqrt(x * x + y * y)
    f = m ** (K - 1.0)
    return HalfPlanePoint(x * f, y * f)
