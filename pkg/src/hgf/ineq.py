"""Inequality case evaluators.

Every checkable claim is an ``IneqCase``: named parameters, the two sides,
and a signed margin.  Orientation: one-sided checks record margin =
rhs - lhs (nonnegative means the inequality holds); sandwich checks record
the outer bounds as lhs/rhs and margin = min of the two one-sided margins;
equality checks record lhs = |difference|, rhs = 0, margin = -lhs.

Tolerance modes: "abs" passes at margin >= -tol; "rel" scales tol by
max(1, |lhs|, |rhs|) so checks on quantities of order 1e10 and of order 1
share one knob.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from hgf import metrics, specfun
from hgf.config import DEFAULT_CONFIG, SpecFunConfig

__all__ = [
    "IneqCase",
    "bernoulli_pair",
    "prop21_case",
    "lemma22_f",
    "F_mfprop",
    "comp_rho_case",
    "arch_bounds_case",
    "fuji_case",
    "remark310_case",
    "lemmaA_case",
    "lemmaB1_case",
    "lemmaB2_case",
    "lemmaC_value",
    "lemmaC_case",
    "lemmaC_log_case",
    "distortion_rhs",
    "schwarz_chain_case",
    "empirical_distortion_case",
    "mobius_distortion_case",
]


@dataclass(slots=True)
class IneqCase:
    name: str
    params: dict[str, float]
    lhs: float
    rhs: float
    margin: float
    passed: bool


def _scale(lhs: float, rhs: float, mode: str) -> float:
    if mode == "abs":
        return 1.0
    return max(1.0, abs(lhs), abs(rhs))


def _case(name, params, lhs, rhs, tol, mode="abs", margin=None) -> IneqCase:
    if margin is None:
        margin = rhs - lhs
    passed = margin >= -tol * _scale(lhs, rhs, mode)
    return IneqCase(name, params, lhs, rhs, margin, passed)


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


# -- section 2: Bernoulli, auxiliary lemmas, metric comparison --------------

def bernoulli_pair(c1: float, c2: float, t: float, tol: float = 1e-9) -> IneqCase:
    """log(1 + c1 t) <= (c1/c2) log(1 + c2 t) for c1 >= c2 >= 1, t > 0."""
    _require(c1 >= c2 >= 1.0, f"need c1 >= c2 >= 1, got c1={c1!r}, c2={c2!r}")
    _require(t > 0.0, f"need t > 0, got {t!r}")
    lhs = math.log1p(c1 * t)
    rhs = (c1 / c2) * math.log1p(c2 * t)
    return _case("bernoulli", {"c1": c1, "c2": c2, "t": t}, lhs, rhs, tol, "rel")


def prop21_case(c: float, x: float, tol: float = 1e-9) -> IneqCase:
    """x <= c (x - 1/x) + 1 for c >= 1, x >= 1."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(x >= 1.0, f"need x >= 1, got {x!r}")
    d = (x - 1.0) * (x + 1.0) / x  # x - 1/x without cancellation near 1
    rhs = c * d + 1.0
    return _case("prop21", {"c": c, "x": x}, x, rhs, tol, "rel")


def lemma22_f(c: float, x: float) -> float:
    """f(x) = log(1 + c (x - 1/x)) / log(x); decreasing on x > 1 for c >= 1."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(x > 1.0, f"need x > 1, got {x!r}")
    d = (x - 1.0) * (x + 1.0) / x
    return math.log1p(c * d) / math.log1p(x - 1.0)


def F_mfprop(c: float, t: float) -> float:
    """F(t) = log(1 + c sqrt(2(ch t - 1))) = log(1 + 2 c sh(t/2)) for t >= 0."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(t >= 0.0, f"need t >= 0, got {t!r}")
    return metrics.h_from_rho(c, t)


def comp_rho_case(c: float, x, y, tol: float = 1e-12) -> IneqCase:
    """Sandwich h/c <= rho <= 2h between the boundary-weighted and hyperbolic metrics."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    rho = metrics.rho_half_plane(x, y)
    h = metrics.h_metric(metrics.HALF_PLANE, c, x, y)
    xr, xi = metrics._coords(x)
    yr, yi = metrics._coords(y)
    params = {"c": c, "x_re": xr, "x_im": xi, "y_re": yr, "y_im": yi, "rho": rho}
    margin = min(rho - h / c, 2.0 * h - rho)
    return _case("comp-rho", params, h / c, 2.0 * h, tol, "abs", margin=margin)


def arch_bounds_case(x: float, tol: float = 1e-9) -> IneqCase:
    """2 log(1 + sqrt((x-1)/2)) <= arch x <= 2 log(1 + sqrt(2(x-1))) for x >= 1."""
    _require(x >= 1.0, f"need x >= 1, got {x!r}")
    lo = 2.0 * math.log1p(math.sqrt(0.5 * (x - 1.0)))
    hi = 2.0 * math.log1p(math.sqrt(2.0 * (x - 1.0)))
    mid = math.acosh(x)
    margin = min(mid - lo, hi - mid)
    return _case("arch-bounds", {"x": x, "arch": mid}, lo, hi, tol, "rel", margin=margin)


# -- section 3: the two-branch Bernoulli-type inequality ---------------------

def _max_pow(t: float, K: float) -> float:
    # max(t^K, t^(1/K)) by direct comparison of t with 1
    return t ** K if t > 1.0 else t ** (1.0 / K)


def _max_log(L: float, K: float) -> float:
    # max(L, L^(1/K)) for L = log(1+2ct); branch flips at L = 1
    return L if L > 1.0 else L ** (1.0 / K)


def fuji_case(c: float, K: float, t: float, tol: float = 1e-9) -> IneqCase:
    """log(1 + 2c max(t^K, t^(1/K))) <= K^(1+c) max(L, L^(1/K)), L = log(1+2ct)."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(t > 0.0, f"need t > 0, got {t!r}")
    lhs = math.log1p(2.0 * c * _max_pow(t, K))
    L = math.log1p(2.0 * c * t)
    rhs = K ** (1.0 + c) * _max_log(L, K)
    return _case("fuji", {"c": c, "K": K, "t": t}, lhs, rhs, tol, "rel")


def remark310_case(tol: float = 1e-9) -> IneqCase:
    """The K^2 variant at (K, c, t) = (1.2, 5, 0.001); must come out violated."""
    c, K, t = 5.0, 1.2, 0.001
    lhs = math.log1p(2.0 * c * _max_pow(t, K))
    L = math.log1p(2.0 * c * t)
    rhs = K * K * _max_log(L, K)
    return _case("remark310", {"c": c, "K": K, "t": t, "exponent": 2.0}, lhs, rhs, tol, "rel")


def lemmaA_case(c: float, K: float, tol: float = 1e-9) -> IneqCase:
    """(K^(1+c))^(K/(K-1)) > 2c, with the K -> 1 limit e^(1+c)."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    d = K - 1.0
    ratio = 1.0 if d == 0.0 else math.log1p(d) / d  # log(K)/(K-1), limit 1
    rhs = math.exp((1.0 + c) * K * ratio)
    return _case("lemmaA", {"c": c, "K": K}, 2.0 * c, rhs, tol, "rel")


def lemmaB1_case(K: float, t: float, tol: float = 1e-12) -> IneqCase:
    """t^(1/K) log t >= -K/e everywhere on t > 0."""
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(t > 0.0, f"need t > 0, got {t!r}")
    lhs = -K / math.e
    rhs = t ** (1.0 / K) * math.log(t)
    return _case("lemmaB1", {"K": K, "t": t}, lhs, rhs, tol, "abs")


def lemmaB2_case(c: float, K: float, t: float, tol: float = 1e-9) -> IneqCase:
    """K^(1+c) log(1+2ct) >= log(1+2c t^(1/K)) on (e-1)/(2c) <= t < 1."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    lo = (math.e - 1.0) / (2.0 * c)
    _require(lo <= t < 1.0, f"need (e-1)/(2c) <= t < 1, got t={t!r}")
    lhs = math.log1p(2.0 * c * t ** (1.0 / K))
    rhs = K ** (1.0 + c) * math.log1p(2.0 * c * t)
    return _case("lemmaB2", {"c": c, "K": K, "t": t}, lhs, rhs, tol, "abs")


def lemmaC_value(c: float, K: float, t: float) -> float:
    """C(K) = (1+2ct)^K - (1+2c t^K); increasing in K for c, t >= 1."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(t >= 1.0, f"need t >= 1, got {t!r}")
    return (1.0 + 2.0 * c * t) ** K - (1.0 + 2.0 * c * t ** K)


def lemmaC_case(c: float, K1: float, K2: float, t: float, tol: float = 1e-9) -> IneqCase:
    """Monotonicity pair: C(K2) >= C(K1) for K2 > K1."""
    _require(K2 > K1, f"need K2 > K1, got K1={K1!r}, K2={K2!r}")
    lhs = lemmaC_value(c, K1, t)
    rhs = lemmaC_value(c, K2, t)
    return _case("lemmaC", {"c": c, "K1": K1, "K2": K2, "t": t}, lhs, rhs, tol, "rel")


def lemmaC_log_case(c: float, K: float, t: float, tol: float = 1e-9) -> IneqCase:
    """Consequence with the better constant: log(1+2c t^K) <= K log(1+2ct)."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(t >= 1.0, f"need t >= 1, got {t!r}")
    lhs = math.log1p(2.0 * c * t ** K)
    rhs = K * math.log1p(2.0 * c * t)
    return _case("lemmaC-log", {"c": c, "K": K, "t": t}, lhs, rhs, tol, "rel")


# -- section 4: the distortion theorem and its proof chain -------------------

def distortion_rhs(c: float, K: float, h: float,
                   config: SpecFunConfig = DEFAULT_CONFIG) -> float:
    """Distortion bound lambda(K)^(1/2) K^(1+c) max(h^(1/K), h)."""
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(h >= 0.0, f"need h >= 0, got {h!r}")
    lam = specfun.lambda_K(K, config)
    hmax = h if h > 1.0 else h ** (1.0 / K)
    return math.sqrt(lam) * K ** (1.0 + c) * hmax


def schwarz_chain_case(c: float, K: float, rho: float, tol: float = 1e-9,
                       config: SpecFunConfig = DEFAULT_CONFIG) -> IneqCase:
    """The three links bounding log(1+2c phi/sqrt(1-phi^2)) at phi = phi_K(th(rho/2)).

    Link margins are recorded in the params as link1/link2/link3; the case
    margin is their minimum.
    """
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    _require(K >= 1.0, f"need K >= 1, got {K!r}")
    _require(rho > 0.0, f"need rho > 0, got {rho!r}")
    r = math.tanh(0.5 * rho)
    rc = 1.0 / math.cosh(0.5 * rho)  # sqrt(1 - r^2), formed without cancellation
    if rc <= 0.0:
        raise OverflowError(f"chain not representable at c={c!r}, K={K!r}, rho={rho!r}")
    if r >= 1.0:
        r = math.nextafter(1.0, 0.0)
    phi = specfun.phi_K(K, r, config)
    psi = specfun.phi_K(1.0 / K, rc, config)  # sqrt(1 - phi^2)
    if psi == 0.0:
        raise OverflowError(f"chain not representable at c={c!r}, K={K!r}, rho={rho!r}")
    sh = math.sinh(0.5 * rho)
    maxpow = _max_pow(sh, K)
    lam = specfun.lambda_K(K, config)
    sqlam = math.sqrt(lam)
    h = math.log1p(2.0 * c * sh)
    start = math.log1p(2.0 * c * phi / psi)
    mid1 = math.log1p(2.0 * c * sqlam * maxpow)
    mid2 = sqlam * math.log1p(2.0 * c * maxpow)
    end = sqlam * K ** (1.0 + c) * _max_log(h, K)
    if not all(map(math.isfinite, (start, mid1, mid2, end))):
        raise OverflowError(f"chain overflow at c={c!r}, K={K!r}, rho={rho!r}")
    link1 = mid1 - start
    link2 = mid2 - mid1
    link3 = end - mid2
    params = {"c": c, "K": K, "rho": rho,
              "link1": link1, "link2": link2, "link3": link3}
    return _case("schwarz-chain", params, start, end, tol, "rel",
                 margin=min(link1, link2, link3))


def empirical_distortion_case(c: float, K: float, x, y, tol: float = 1e-9,
                              config: SpecFunConfig = DEFAULT_CONFIG) -> IneqCase:
    """Distortion bound exercised with the radial stretch as the test map."""
    fx = metrics.stretch_map(K, x)
    fy = metrics.stretch_map(K, y)
    lhs = metrics.h_metric(metrics.HALF_PLANE, c, fx, fy)
    h = metrics.h_metric(metrics.HALF_PLANE, c, x, y)
    rhs = distortion_rhs(c, K, h, config)
    xr, xi = metrics._coords(x)
    yr, yi = metrics._coords(y)
    params = {"c": c, "K": K, "x_re": xr, "x_im": xi, "y_re": yr, "y_im": yi}
    return _case("distortion-stretch", params, lhs, rhs, tol, "rel")


def mobius_distortion_case(c: float, m: metrics.MobiusH, x, y,
                           tol: float = 1e-10) -> IneqCase:
    """K = 1 distortion: the metric value must be Mobius invariant.

    Records lhs = |h(fx, fy) - h(x, y)|, rhs = 0, margin = -lhs, so the case
    passes exactly when the two values agree within tol.
    """
    _require(c >= 1.0, f"need c >= 1, got {c!r}")
    fx = metrics.mobius_apply(m, x)
    fy = metrics.mobius_apply(m, y)
    h_img = metrics.h_metric(metrics.HALF_PLANE, c, fx, fy)
    h_src = metrics.h_metric(metrics.HALF_PLANE, c, x, y)
    diff = abs(h_img - h_src)
    xr, xi = metrics._coords(x)
    yr, yi = metrics._coords(y)
    params = {"c": c, "a": m.a, "b": m.b, "cc": m.c, "d": m.d,
              "x_re": xr, "x_im": xi, "y_re": yr, "y_im": yi}
    return _case("distortion-mobius", params, diff, 0.0, tol, "abs", margin=-diff)
