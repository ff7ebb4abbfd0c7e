"""Pure-Python kernel backend.

Scalar twins of the compiled kernels in ``_core.pyx``.  Both backends keep
the same expression trees so results agree to the last few ulps; tests
compare them directly.  Batch helpers use numpy and exist so the fallback
stays usable on the 1e5-sample scans.

Domain validation lives in the public modules; kernels assume their
preconditions hold.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"

_PI = math.pi
_HALF_PI = 0.5 * math.pi
_PI_SQ_4 = math.pi * math.pi / 4.0


def agm(a: float, b: float, rtol: float, max_iter: int) -> float:
    """Arithmetic-geometric mean of a >= b > 0."""
    for _ in range(max_iter):
        if a - b <= rtol * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise RuntimeError(f"AGM did not converge within {max_iter} iterations")


def ellint_K(r: float, rtol: float, max_iter: int) -> float:
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    return _PI / (2.0 * agm(1.0, rc, rtol, max_iter))


def _mu_agm(r: float, rtol: float, max_iter: int) -> float:
    # (pi/2) * AGM(1, r') / AGM(1, r) with r' the complementary modulus
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    return _HALF_PI * agm(1.0, rc, rtol, max_iter) / agm(1.0, r, rtol, max_iter)


def mu(r: float, rtol: float, max_iter: int, r_small: float, r_near_one: float) -> float:
    if r < r_small:
        return math.log(4.0 / r)
    if r > r_near_one:
        # complement stays above sqrt(2^-52) ~ 1.5e-8, inside the AGM range
        rc = math.sqrt((1.0 - r) * (1.0 + r))
        return _PI_SQ_4 / _mu_agm(rc, rtol, max_iter)
    return _mu_agm(r, rtol, max_iter)


_ONE_BELOW = math.nextafter(1.0, 0.0)


def mu_inv(
    y: float,
    rtol: float,
    inv_tol: float,
    max_iter: int,
    r_small: float,
    r_near_one: float,
) -> float:
    y_hi = math.log(4.0 / r_small)
    if y >= y_hi:
        return 4.0 * math.exp(-y)
    rc_edge = math.sqrt((1.0 - r_near_one) * (1.0 + r_near_one))
    y_lo = _PI_SQ_4 / _mu_agm(rc_edge, rtol, max_iter)
    if y <= y_lo:
        # invert through the reflection identity; the recursive target
        # exceeds mu(rc_edge) > y_lo, so this recurses at most once
        s = mu_inv(_PI_SQ_4 / y, rtol, inv_tol, max_iter, r_small, r_near_one)
        r = math.sqrt((1.0 - s) * (1.0 + s))
        return r if r < 1.0 else _ONE_BELOW
    # bisection to a 1e-6 bracket, then Newton with a central-difference slope
    lo = r_small
    hi = r_near_one
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if _mu_agm(mid, rtol, max_iter) > y:
            lo = mid
        else:
            hi = mid
    # Converged when the residual meets inv_tol or the Newton displacement
    # falls to ulp scale: near the interval ends one ulp of r already moves
    # mu by more than any small inv_tol, so displacement is the floor there.
    r = 0.5 * (lo + hi)
    converged = False
    for _ in range(40):
        f = _mu_agm(r, rtol, max_iter) - y
        if abs(f) <= inv_tol * max(1.0, y):
            converged = True
            break
        if f > 0.0:
            lo = r
        else:
            hi = r
        h = 1e-7 * r * (1.0 - r)
        d = (_mu_agm(r + h, rtol, max_iter) - _mu_agm(r - h, rtol, max_iter)) / (2.0 * h)
        if d == 0.0:
            rn = 0.5 * (lo + hi)
        else:
            rn = r - f / d
            if not (lo <= rn <= hi):
                rn = 0.5 * (lo + hi)
        step = abs(rn - r)
        r = rn
        if step <= 1e-15 * r:
            converged = True
            break
    if not converged:
        raise RuntimeError(f"mu_inv did not converge for y={y!r}")
    return r


def phi(
    K: float,
    r: float,
    rtol: float,
    inv_tol: float,
    max_iter: int,
    r_small: float,
    r_near_one: float,
) -> float:
    m = mu(r, rtol, max_iter, r_small, r_near_one)
    return mu_inv(m / K, rtol, inv_tol, max_iter, r_small, r_near_one)


# -- metric kernels ---------------------------------------------------------

def rho_half_plane(x1: float, y1: float, x2: float, y2: float) -> float:
    dx = x2 - x1
    dy = y2 - y1
    q = math.sqrt(dx * dx + dy * dy) / (2.0 * math.sqrt(y1 * y2))
    return 2.0 * math.asinh(q)


def rho_disk(ax: float, ay: float, bx: float, by: float) -> float:
    dx = ax - bx
    dy = ay - by
    da = 1.0 - (ax * ax + ay * ay)
    db = 1.0 - (bx * bx + by * by)
    return 2.0 * math.asinh(math.sqrt(dx * dx + dy * dy) / math.sqrt(da * db))


def h_half_plane(c: float, x1: float, y1: float, x2: float, y2: float) -> float:
    dx = x2 - x1
    dy = y2 - y1
    return math.log1p(c * math.sqrt(dx * dx + dy * dy) / math.sqrt(y1 * y2))


def h_disk(c: float, ax: float, ay: float, bx: float, by: float) -> float:
    dx = ax - bx
    dy = ay - by
    da = 1.0 - math.sqrt(ax * ax + ay * ay)
    db = 1.0 - math.sqrt(bx * bx + by * by)
    return math.log1p(c * math.sqrt(dx * dx + dy * dy) / math.sqrt(da * db))


def h_from_rho(c: float, rho: float) -> float:
    return math.log1p(2.0 * c * math.sinh(0.5 * rho))


# -- batch kernels ----------------------------------------------------------

def h_pairs_half_plane(c, ax, ay, bx, by, out):
    dx = bx - ax
    dy = by - ay
    np.log1p(c * np.sqrt(dx * dx + dy * dy) / np.sqrt(ay * by), out=out)
    return out


def rho_pairs_half_plane(ax, ay, bx, by, out):
    dx = bx - ax
    dy = by - ay
    np.arcsinh(np.sqrt(dx * dx + dy * dy) / (2.0 * np.sqrt(ay * by)), out=out)
    out *= 2.0
    return out


def triangle_margins_half_plane(c, ax, ay, bx, by, cx, cy, out):
    """out[i] = h(a,b) + h(b,c) - h(a,c) for row-wise half-plane triples."""
    tmp = np.empty_like(out)
    h_pairs_half_plane(c, ax, ay, bx, by, out)
    h_pairs_half_plane(c, bx, by, cx, cy, tmp)
    out += tmp
    h_pairs_half_plane(c, ax, ay, cx, cy, tmp)
    out -= tmp
    return out
