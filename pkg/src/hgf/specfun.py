"""Elliptic-integral stack: K, mu, mu_inv, gamma2, phi_K, lambda_K, eta_K.

All functions are pure and thread-safe; double precision throughout.  The
complete elliptic integral is evaluated by the arithmetic-geometric mean,
the conformal modulus mu through its AGM quotient with a log(4/r) asymptote
below ``r_small`` and the reflection identity above ``r_near_one``, and the
inverse by bracketing bisection plus a Newton polish.
"""

from __future__ import annotations

import math
from functools import lru_cache

from hgf._backend import core as _C
from hgf.config import DEFAULT_CONFIG, SpecFunConfig

__all__ = [
    "ellint_K",
    "mu",
    "mu_inv",
    "gamma2",
    "phi_K",
    "lambda_K",
    "eta_K",
]


def _check_finite(name: str, v: float) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite, got {v!r}")
    return v


def ellint_K(r: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Complete elliptic integral of the first kind, K(r) = pi/(2*agm(1, r')).

    Strictly increasing on [0, 1), K(0) = pi/2, divergent as r -> 1-.
    """
    r = _check_finite("r", r)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must be in [0, 1), got {r!r}")
    return _C.ellint_K(r, config.agm_tol, config.max_iter)


def mu(r: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Modulus of the plane ring domain: mu(r) = (pi/2) K(r')/K(r).

    Decreasing homeomorphism of (0, 1) onto (0, inf).
    """
    r = _check_finite("r", r)
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must be in (0, 1), got {r!r}")
    return _C.mu(r, config.agm_tol, config.max_iter, config.r_small, config.r_near_one)


def mu_inv(y: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Inverse of mu on (0, inf).

    Saturates at the largest double below 1 when the true preimage is closer
    to 1 than one ulp.
    """
    y = _check_finite("y", y)
    if y <= 0.0:
        raise ValueError(f"y must be > 0, got {y!r}")
    return _C.mu_inv(
        y, config.agm_tol, config.inv_tol, config.max_iter,
        config.r_small, config.r_near_one,
    )


def gamma2(s: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Plane ring capacity at s > 1: gamma2(s) = 2*pi/mu(1/s)."""
    s = _check_finite("s", s)
    if s <= 1.0:
        raise ValueError(f"s must be > 1, got {s!r}")
    return 2.0 * math.pi / mu(1.0 / s, config)


def phi_K(K: float, r: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Plane distortion function: phi_K(r) = mu_inv(mu(r)/K).

    Increasing in r, equals r at K = 1, and >= r for K >= 1.  Like
    ``mu_inv`` it saturates one ulp below 1 when the exact value is not
    representable.
    """
    K = _check_finite("K", K)
    r = _check_finite("r", r)
    if K <= 0.0:
        raise ValueError(f"K must be > 0, got {K!r}")
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must be in (0, 1), got {r!r}")
    return _C.phi(
        K, r, config.agm_tol, config.inv_tol, config.max_iter,
        config.r_small, config.r_near_one,
    )


@lru_cache(maxsize=256)
def _lambda_cached(K: float, config: SpecFunConfig) -> float:
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    num = phi_K(K, inv_sqrt2, config)
    den = phi_K(1.0 / K, inv_sqrt2, config)
    q = num / den
    return q * q


def lambda_K(K: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Distortion constant (phi_K(1/sqrt2)/phi_{1/K}(1/sqrt2))^2 for K >= 1.

    Equals 1 at K = 1 (returned exactly, without evaluating the quotient)
    and stays below exp(pi*(K - 1/K)).
    """
    K = _check_finite("K", K)
    if K < 1.0:
        raise ValueError(f"K must be >= 1, got {K!r}")
    if K == 1.0:
        return 1.0
    return _lambda_cached(K, config)


def eta_K(K: float, t: float, config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """eta_K(t) = phi^2/(1 - phi^2) at phi = phi_K(sqrt(t/(1+t))).

    Evaluated as (phi/psi)^2 with psi = phi_{1/K}(sqrt(1/(1+t))), using the
    complementary identity psi^2 = 1 - phi^2; this keeps full precision when
    phi is within an ulp of 1.  Raises OverflowError when the quotient is
    not representable.
    """
    K = _check_finite("K", K)
    t = _check_finite("t", t)
    if K < 1.0:
        raise ValueError(f"K must be >= 1, got {K!r}")
    if t <= 0.0:
        raise ValueError(f"t must be > 0, got {t!r}")
    r = math.sqrt(t / (1.0 + t))
    rc = 1.0 / math.sqrt(1.0 + t)
    if rc <= 0.0:
        raise OverflowError(f"eta_K not representable for K={K!r}, t={t!r}")
    if r >= 1.0:
        r = math.nextafter(1.0, 0.0)
    num = phi_K(K, r, config)
    den = phi_K(1.0 / K, rc, config)
    if den == 0.0:
        raise OverflowError(f"eta_K not representable for K={K!r}, t={t!r}")
    q = num / den
    return q * q
