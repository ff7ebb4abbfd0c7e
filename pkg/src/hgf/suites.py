"""Verification suites: every inequality and sharpness claim as a grid/sample scan.

Each suite resolves its parameter axes from built-in defaults (overridable
per axis through ``ScanSpec.grids``), evaluates one ``IneqCase`` per grid
point or sample, and reports against its expectation.  All suites expect
zero violations except ``remark310`` (exactly one: the K^2 exponent row)
and ``disk-triangle`` (violations exactly for c < 2).

Default axes: c in {1, 1.5, 2, 5, 10}; K in {1, 1.01, 1.2, 1.5, 2, 4, 8};
t log-spaced over [1e-6, 1e6] (61 points); rho log-spaced over [1e-4, 30].
Sampling boxes: half-plane points with re in [-10, 10], im in (0, 10].
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

import hgf
from hgf import ineq, metrics, specfun
from hgf._backend import core as _C
from hgf.ineq import IneqCase
from hgf.report import GridSpec, Report, ScanSpec

__all__ = ["SUITES", "SEARCHES", "Suite", "run_suite", "run_search", "suite_names"]

C_GRID = (1.0, 1.5, 2.0, 5.0, 10.0)
K_GRID = (1.0, 1.01, 1.2, 1.5, 2.0, 4.0, 8.0)
LAMBDA_K_GRID = (1.0, 1.01, 1.1, 1.2, 1.5, 2.0, 3.0, 4.0, 5.0, 8.0)
STRETCH_K_GRID = (1.25, 2.0, 4.0)
SMALL_C_GRID = (1.0, 2.0, 5.0)
COMP_RHO_C_GRID = (1.0, 2.0, 10.0)
TRIANGLE_C_GRID = (1.0, 1.5, 2.0, 5.0)

T_GRID = GridSpec(1e-6, 1e6, 61, "log")
ETA_T_GRID = GridSpec(1e-4, 1e4, 61, "log")
RHO_GRID = GridSpec(1e-4, 30.0, 31, "log")
R_UNIT_GRID = GridSpec(1e-6, 1.0 - 1e-6, 41, "log")
# The reflection product is representation-limited below r ~ 1e-3: forming
# sqrt(1-r^2) in doubles already perturbs mu by ~2e-16/(r^2 mu); this grid
# keeps that intrinsic error under ~1e-10.
R_REFL_GRID = GridSpec(1e-3, 1.0 - 1e-3, 41, "log")
# phi_K(r) comes within an ulp of 1 for large K and r; the return trip then
# cannot recover r.  K <= 8 with r <= 0.6 keeps the pair error under 1e-8.
R_INV_GRID = GridSpec(0.02, 0.6, 21, "log")
X_GRID = GridSpec(1e-9, 1e6, 61, "log")  # offsets x-1 for the x >= 1 suites
ST_GRID = GridSpec(0.01, 20.0, 21, "log")
MFPROP_T_GRID = GridSpec(1e-4, 50.0, 41, "log")


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    param_names: tuple[str, ...]
    default_tol: float
    runner: Callable[[ScanSpec, float], list[IneqCase]]
    check: Callable[[ScanSpec, list[IneqCase]], tuple[bool, str]]
    default_samples: int = 0  # 0: suite does not sample


def _axis(spec: ScanSpec, name: str, default) -> tuple[np.ndarray, str]:
    g = spec.grids.get(name)
    if g is not None:
        return g.points(), f"{name}={g.describe()}"
    if isinstance(default, GridSpec):
        return default.points(), f"{name}={default.describe()}"
    pts = np.asarray(default, dtype=float)
    return pts, f"{name}=[{','.join(f'{v:g}' for v in pts)}]"


def _resolve(spec: ScanSpec, suite: Suite) -> tuple[float, int]:
    tol = spec.tol if spec.tol is not None else suite.default_tol
    n = spec.samples if spec.samples is not None else suite.default_samples
    return tol, n


def _apply_chunk(job):
    fn, chunk = job
    return [fn(*args) for args in chunk]


def _eval_cases(fn, cases: list[tuple], jobs: int) -> list[IneqCase]:
    """Evaluate fn(*case) for each case, fanning out when it pays off."""
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(cases) >= 20000:
        nchunks = jobs * 4
        chunks = [cases[i::nchunks] for i in range(nchunks)]
        # round-robin split; reassemble in original order afterwards
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_apply_chunk, [(fn, ch) for ch in chunks]))
        out: list[IneqCase] = [None] * len(cases)  # type: ignore[list-item]
        for ci, part in enumerate(parts):
            for j, case in enumerate(part):
                out[ci + j * nchunks] = case
        return out
    return [fn(*args) for args in cases]


def _expect_zero(spec: ScanSpec, rows: list[IneqCase]) -> tuple[bool, str]:
    return all(r.passed for r in rows), "zero violations"


def _expect_remark310(spec: ScanSpec, rows: list[IneqCase]) -> tuple[bool, str]:
    bad = [r for r in rows if not r.passed]
    ok = len(bad) == 1 and bad[0].name == "remark310"
    return ok, "exactly one violation: the K^2 exponent row"


def _expect_disk(spec: ScanSpec, rows: list[IneqCase]) -> tuple[bool, str]:
    by_c: dict[float, list[IneqCase]] = {}
    for r in rows:
        by_c.setdefault(r.params["c"], []).append(r)
    ok = True
    for c, group in by_c.items():
        nviol = sum(1 for r in group if not r.passed)
        if c < 2.0:
            ok = ok and nviol >= 1
        else:
            ok = ok and nviol == 0
    return ok, "violations found for every c < 2, none for c >= 2"


# -- samplers ----------------------------------------------------------------

def _sample_points(rng, n: int, re_half: float = 10.0, im_lo: float = 0.0,
                   im_hi: float = 10.0):
    u = rng.random((2, n))
    re = -re_half + 2.0 * re_half * u[0]
    im = im_hi - (im_hi - im_lo) * u[1]  # in (im_lo, im_hi]
    return re, im


def _sample_mobius(rng, n: int):
    """Normalized maps with determinant 1, rejection-sampled for det >= 0.3."""
    out = np.empty((n, 4))
    have = 0
    while have < n:
        cand = -2.0 + 4.0 * rng.random((2 * (n - have), 4))
        det = cand[:, 0] * cand[:, 3] - cand[:, 1] * cand[:, 2]
        keep = cand[det >= 0.3]
        det = det[det >= 0.3]
        take = min(len(keep), n - have)
        out[have:have + take] = keep[:take] / np.sqrt(det[:take, None])
        have += take
    return out


# -- special-function suites --------------------------------------------------

def _equality_row(name: str, params: dict, diff: float, tol: float) -> IneqCase:
    return IneqCase(name, params, diff, 0.0, -diff, diff <= tol)


def _run_mu_roundtrip(spec, tol):
    rs, _ = _axis(spec, "r", R_UNIT_GRID)
    rows = []
    for r in rs:
        r = float(r)
        diff = abs(specfun.mu_inv(specfun.mu(r)) - r)
        rows.append(_equality_row("mu-roundtrip", {"r": r}, diff, tol))
    return rows


def _run_mu_reflection(spec, tol):
    rs, _ = _axis(spec, "r", R_REFL_GRID)
    target = math.pi * math.pi / 4.0
    rows = []
    for r in rs:
        r = float(r)
        prod = specfun.mu(r) * specfun.mu(math.sqrt(1.0 - r * r))
        rows.append(_equality_row("mu-reflection", {"r": r}, abs(prod - target), tol))
    return rows


def _run_phi_identity(spec, tol):
    rs, _ = _axis(spec, "r", R_UNIT_GRID)
    rows = []
    for r in rs:
        r = float(r)
        diff = abs(specfun.phi_K(1.0, r) - r)
        rows.append(_equality_row("phi-identity", {"r": r}, diff, tol))
    return rows


def _run_phi_inverse_pair(spec, tol):
    rs, _ = _axis(spec, "r", R_INV_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    rows = []
    for K in Ks:
        for r in rs:
            K = float(K)
            r = float(r)
            diff = abs(specfun.phi_K(1.0 / K, specfun.phi_K(K, r)) - r)
            rows.append(_equality_row("phi-inverse-pair", {"K": K, "r": r}, diff, tol))
    return rows


def _run_specfun_monotone(spec, tol):
    rs, _ = _axis(spec, "r", R_UNIT_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    rows = []
    kvals = [float(specfun.ellint_K(float(r))) for r in rs]
    mvals = [float(specfun.mu(float(r))) for r in rs]
    for i in range(len(rs) - 1):
        p = {"r1": float(rs[i]), "r2": float(rs[i + 1])}
        rows.append(ineq.IneqCase("monotone-ellint", p, kvals[i], kvals[i + 1],
                                  kvals[i + 1] - kvals[i], kvals[i + 1] - kvals[i] >= -tol))
        rows.append(ineq.IneqCase("monotone-mu", p, mvals[i + 1], mvals[i],
                                  mvals[i] - mvals[i + 1], mvals[i] - mvals[i + 1] >= -tol))
    for K in Ks:
        K = float(K)
        pv = [float(specfun.phi_K(K, float(r))) for r in rs]
        for i in range(len(rs) - 1):
            p = {"K": K, "r1": float(rs[i]), "r2": float(rs[i + 1])}
            m = pv[i + 1] - pv[i]
            rows.append(ineq.IneqCase("monotone-phi", p, pv[i], pv[i + 1], m, m >= -tol))
    return rows


def _run_lambda_bound(spec, tol):
    Ks, _ = _axis(spec, "K", LAMBDA_K_GRID)
    rows = []
    for K in Ks:
        K = float(K)
        lam = specfun.lambda_K(K)
        bound = math.exp(math.pi * (K - 1.0 / K))
        rows.append(ineq._case("lambda-lower", {"K": K}, 1.0, lam, tol, "rel"))
        rows.append(ineq._case("lambda-upper", {"K": K}, lam, bound, tol, "rel"))
    return rows


def _run_eta_bound(spec, tol):
    Ks, _ = _axis(spec, "K", K_GRID)
    ts, _ = _axis(spec, "t", ETA_T_GRID)
    rows = []
    for K in Ks:
        K = float(K)
        lam = specfun.lambda_K(K)
        for t in ts:
            t = float(t)
            lhs = specfun.eta_K(K, t)
            rhs = lam * (t ** K if t > 1.0 else t ** (1.0 / K))
            rows.append(ineq._case("eta-bound", {"K": K, "t": t}, lhs, rhs, tol, "rel"))
    return rows


# -- metric suites ------------------------------------------------------------

def _run_triangle_half_plane(spec, tol):
    cs, _ = _axis(spec, "c", TRIANGLE_C_GRID)
    _, n = _resolve(spec, SUITES["triangle-half-plane"])
    rng = np.random.default_rng(spec.seed)
    ax, ay = _sample_points(rng, n)
    bx, by = _sample_points(rng, n)
    cx, cy = _sample_points(rng, n)
    rows = []
    margins = np.empty(n)
    hac = np.empty(n)
    for c in cs:
        c = float(c)
        _C.triangle_margins_half_plane(c, ax, ay, bx, by, cx, cy, margins)
        _C.h_pairs_half_plane(c, ax, ay, cx, cy, hac)
        for i in range(n):
            lhs = float(hac[i])
            m = float(margins[i])
            params = {"c": c, "a_re": float(ax[i]), "a_im": float(ay[i]),
                      "b_re": float(bx[i]), "b_im": float(by[i]),
                      "c_re": float(cx[i]), "c_im": float(cy[i])}
            rows.append(IneqCase("triangle-half-plane", params, lhs, lhs + m, m, m >= -tol))
    return rows


def _run_comp_rho(spec, tol):
    cs, _ = _axis(spec, "c", COMP_RHO_C_GRID)
    _, n = _resolve(spec, SUITES["comp-rho"])
    rng = np.random.default_rng(spec.seed)
    ax, ay = _sample_points(rng, n)
    bx, by = _sample_points(rng, n)
    rho = np.empty(n)
    h = np.empty(n)
    _C.rho_pairs_half_plane(ax, ay, bx, by, rho)
    rows = []
    for c in cs:
        c = float(c)
        _C.h_pairs_half_plane(c, ax, ay, bx, by, h)
        lo = rho - h / c
        hi = 2.0 * h - rho
        for i in range(n):
            m = float(min(lo[i], hi[i]))
            params = {"c": c, "x_re": float(ax[i]), "x_im": float(ay[i]),
                      "y_re": float(bx[i]), "y_im": float(by[i]), "rho": float(rho[i])}
            rows.append(IneqCase("comp-rho", params, float(h[i] / c), float(2.0 * h[i]),
                                 m, m >= -tol))
    return rows


def _run_bridge_identity(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    _, n = _resolve(spec, SUITES["bridge-identity"])
    rng = np.random.default_rng(spec.seed)
    ax, ay = _sample_points(rng, n)
    bx, by = _sample_points(rng, n)
    rho = np.empty(n)
    h = np.empty(n)
    _C.rho_pairs_half_plane(ax, ay, bx, by, rho)
    rows = []
    for c in cs:
        c = float(c)
        _C.h_pairs_half_plane(c, ax, ay, bx, by, h)
        via_rho = np.log1p(2.0 * c * np.sinh(0.5 * rho))
        diff = np.abs(via_rho - h)
        for i in range(n):
            params = {"c": c, "x_re": float(ax[i]), "x_im": float(ay[i]),
                      "y_re": float(bx[i]), "y_im": float(by[i])}
            rows.append(_equality_row("bridge-identity", params, float(diff[i]), tol))
    return rows


def _run_subadditivity(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    ss, _ = _axis(spec, "s", ST_GRID)
    ts, _ = _axis(spec, "t", ST_GRID)
    rows = []
    for c in cs:
        c = float(c)
        for s in ss:
            s = float(s)
            fs = ineq.F_mfprop(c, s)
            for t in ts:
                t = float(t)
                lhs = ineq.F_mfprop(c, s + t)
                rhs = fs + ineq.F_mfprop(c, t)
                rows.append(ineq._case("subadditivity", {"c": c, "s": s, "t": t},
                                       lhs, rhs, tol, "abs"))
    return rows


def _run_mobius_invariance(spec, tol):
    _, n = _resolve(spec, SUITES["mobius-invariance"])
    rng = np.random.default_rng(spec.seed)
    maps = _sample_mobius(rng, n)
    ax, ay = _sample_points(rng, n, re_half=5.0, im_lo=0.1)
    bx, by = _sample_points(rng, n, re_half=5.0, im_lo=0.1)
    rows = []
    for i in range(n):
        a, b, c_, d = map(float, maps[i])
        m = metrics.MobiusH(a, b, c_, d)
        x = metrics.HalfPlanePoint(float(ax[i]), float(ay[i]))
        y = metrics.HalfPlanePoint(float(bx[i]), float(by[i]))
        fx = metrics.mobius_apply(m, x)
        fy = metrics.mobius_apply(m, y)
        diff = abs(metrics.rho_half_plane(fx, fy) - metrics.rho_half_plane(x, y))
        params = {"a": a, "b": b, "cc": c_, "d": d,
                  "x_re": x.re, "x_im": x.im, "y_re": y.re, "y_im": y.im}
        rows.append(_equality_row("mobius-invariance", params, diff, tol))
    return rows


_DISK_LADDER = tuple(1.0 - 10.0 ** (-k / 2.0) for k in range(2, 25))
_DISK_PHASES = tuple(2.0 * math.pi * j / 8.0 for j in range(8))


def _disk_triple_row(c, r1, r2, theta, b_re, b_im, tol):
    ct, st = math.cos(theta), math.sin(theta)
    a = (-r1 * ct, -r1 * st)
    cpt = (r2 * ct, r2 * st)
    b = (b_re, b_im)
    hab = _C.h_disk(c, a[0], a[1], b[0], b[1])
    hbc = _C.h_disk(c, b[0], b[1], cpt[0], cpt[1])
    hac = _C.h_disk(c, a[0], a[1], cpt[0], cpt[1])
    m = hab + hbc - hac
    params = {"c": c, "r1": r1, "r2": r2, "theta": theta, "b_re": b_re, "b_im": b_im}
    return IneqCase("disk-triangle", params, hac, hab + hbc, m, m >= -tol)


def _run_disk_triangle(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    _, n = _resolve(spec, SUITES["disk-triangle"])
    rng = np.random.default_rng(spec.seed)
    u = rng.random((n, 5))
    rows = []
    for c in cs:
        c = float(c)
        # structured boundary ladder of collinear triples a = -r, b = 0, c = r
        for r in _DISK_LADDER:
            for theta in _DISK_PHASES:
                rows.append(_disk_triple_row(c, r, r, theta, 0.0, 0.0, tol))
        # random phase-perturbed triples approaching the boundary
        for i in range(n):
            r1 = 1.0 - 10.0 ** (-1.0 - 11.0 * u[i, 0])
            r2 = 1.0 - 10.0 ** (-1.0 - 11.0 * u[i, 1])
            theta = 2.0 * math.pi * u[i, 2]
            br = 0.1 * u[i, 3]
            bphi = 2.0 * math.pi * u[i, 4]
            rows.append(_disk_triple_row(c, r1, r2, theta,
                                         br * math.cos(bphi), br * math.sin(bphi), tol))
    return rows


# -- inequality suites ---------------------------------------------------------

def _run_bernoulli(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    ts, _ = _axis(spec, "t", T_GRID)
    rows = []
    for c1 in cs:
        for c2 in cs:
            if c1 < c2:
                continue
            for t in ts:
                rows.append(ineq.bernoulli_pair(float(c1), float(c2), float(t), tol))
    return rows


def _run_prop21(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    dx, _ = _axis(spec, "x", X_GRID)
    xs = [1.0] + [1.0 + float(d) for d in dx]
    cases = [(float(c), x) for c in cs for x in xs]
    return _eval_cases(partial(ineq.prop21_case, tol=tol), cases, spec.jobs)


def _run_lemma22(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    dx, _ = _axis(spec, "x", X_GRID)
    xs = [1.0 + float(d) for d in dx]
    rows = []
    for c in cs:
        c = float(c)
        vals = [ineq.lemma22_f(c, x) for x in xs]
        for i in range(len(xs) - 1):
            m = vals[i] - vals[i + 1]
            rows.append(IneqCase("lemma22-monotone", {"c": c, "x1": xs[i], "x2": xs[i + 1]},
                                 vals[i + 1], vals[i], m, m >= -tol))
    return rows


def _run_mfprop(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    ts, _ = _axis(spec, "t", MFPROP_T_GRID)
    rows = []
    for c in cs:
        c = float(c)
        vals = [ineq.F_mfprop(c, float(t)) for t in ts]
        for i in range(len(ts) - 1):
            t1, t2 = float(ts[i]), float(ts[i + 1])
            p = {"c": c, "t1": t1, "t2": t2}
            m_inc = vals[i + 1] - vals[i]
            rows.append(IneqCase("mfprop-increasing", p, vals[i], vals[i + 1],
                                 m_inc, m_inc >= -tol))
            m_dec = vals[i] / t1 - vals[i + 1] / t2
            rows.append(IneqCase("mfprop-ratio-decreasing", p, vals[i + 1] / t2,
                                 vals[i] / t1, m_dec, m_dec >= -tol))
    return rows


def _run_arch_bounds(spec, tol):
    dx, _ = _axis(spec, "x", X_GRID)
    xs = [1.0] + [1.0 + float(d) for d in dx]
    return [ineq.arch_bounds_case(x, tol) for x in xs]


def _run_fuji(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    ts, _ = _axis(spec, "t", T_GRID)
    cases = [(float(c), float(K), float(t)) for c in cs for K in Ks for t in ts]
    return _eval_cases(partial(ineq.fuji_case, tol=tol), cases, spec.jobs)


def _run_remark310(spec, tol):
    k2 = ineq.remark310_case(tol)
    companion = ineq.fuji_case(5.0, 1.2, 0.001, tol)
    companion.params = dict(companion.params)
    companion.params["exponent"] = 1.0 + companion.params["c"]
    return [k2, companion]


def _run_lemmaA(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    return [ineq.lemmaA_case(float(c), float(K), tol) for c in cs for K in Ks]


def _run_lemmaB1(spec, tol):
    Ks, _ = _axis(spec, "K", K_GRID)
    ts, _ = _axis(spec, "t", T_GRID)
    return [ineq.lemmaB1_case(float(K), float(t), tol) for K in Ks for t in ts]


def _run_lemmaB1_min(spec, tol):
    Ks, _ = _axis(spec, "K", K_GRID)
    rows = []
    for K in Ks:
        K = float(K)
        tstar = math.exp(-K)
        # dense log grid, deliberately not centered on the true minimizer
        t = tstar * np.exp(np.linspace(-2.07, 1.93, 40001))
        vals = t ** (1.0 / K) * np.log(t)
        i = int(np.argmin(vals))
        loc_err = abs(float(t[i]) - tstar) / tstar
        val_err = abs(float(vals[i]) + K / math.e)
        rows.append(ineq._case("lemmaB1-min-location", {"K": K, "t_star": float(t[i])},
                               loc_err, 1e-4, tol, "abs"))
        rows.append(ineq._case("lemmaB1-min-value", {"K": K, "min_value": float(vals[i])},
                               val_err, 1e-6, tol, "abs"))
    return rows


def _run_lemmaB2(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    rows = []
    for c in cs:
        c = float(c)
        lo = (math.e - 1.0) / (2.0 * c)
        ts = np.linspace(lo, 1.0, 22)[:-1]
        for K in Ks:
            for t in ts:
                rows.append(ineq.lemmaB2_case(c, float(K), float(t), tol))
    return rows


def _run_lemmaC(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    ts, _ = _axis(spec, "t", T_GRID)
    ts = [float(t) for t in ts if t >= 1.0]
    rows = []
    for c in cs:
        c = float(c)
        for t in ts:
            for i in range(len(Ks) - 1):
                rows.append(ineq.lemmaC_case(c, float(Ks[i]), float(Ks[i + 1]), t, tol))
            for K in Ks:
                rows.append(ineq.lemmaC_log_case(c, float(K), t, tol))
    return rows


def _run_schwarz_chain(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    rhos, _ = _axis(spec, "rho", RHO_GRID)
    cases = [(float(c), float(K), float(rho)) for c in cs for K in Ks for rho in rhos]
    return _eval_cases(partial(ineq.schwarz_chain_case, tol=tol), cases, spec.jobs)


def _run_distortion_stretch(spec, tol):
    cs, _ = _axis(spec, "c", SMALL_C_GRID)
    Ks, _ = _axis(spec, "K", STRETCH_K_GRID)
    _, n = _resolve(spec, SUITES["distortion-stretch"])
    rng = np.random.default_rng(spec.seed)
    ax, ay = _sample_points(rng, n)
    bx, by = _sample_points(rng, n)
    cases = [(float(c), float(K), (float(ax[i]), float(ay[i])), (float(bx[i]), float(by[i])))
             for c in cs for K in Ks for i in range(n)]
    return _eval_cases(partial(ineq.empirical_distortion_case, tol=tol), cases, spec.jobs)


def _run_distortion_mobius(spec, tol):
    cs, _ = _axis(spec, "c", SMALL_C_GRID)
    _, n = _resolve(spec, SUITES["distortion-mobius"])
    rng = np.random.default_rng(spec.seed)
    maps = _sample_mobius(rng, n)
    ax, ay = _sample_points(rng, n, re_half=5.0, im_lo=0.1)
    bx, by = _sample_points(rng, n, re_half=5.0, im_lo=0.1)
    rows = []
    for c in cs:
        c = float(c)
        for i in range(n):
            m = metrics.MobiusH(*map(float, maps[i]))
            rows.append(ineq.mobius_distortion_case(
                c, m, (float(ax[i]), float(ay[i])), (float(bx[i]), float(by[i])), tol))
    return rows


# -- registry ------------------------------------------------------------------

SUITES: dict[str, Suite] = {}


def _register(name, description, param_names, default_tol, runner,
              check=_expect_zero, default_samples=0):
    SUITES[name] = Suite(name, description, param_names, default_tol,
                         runner, check, default_samples)


_register("mu-roundtrip", "mu_inv(mu(r)) returns r", ("r",), 1e-10, _run_mu_roundtrip)
_register("mu-reflection", "mu(r) mu(sqrt(1-r^2)) = pi^2/4", ("r",), 1e-9,
          _run_mu_reflection)
_register("phi-identity", "phi_1 is the identity", ("r",), 1e-10, _run_phi_identity)
_register("phi-inverse-pair", "phi_{1/K} inverts phi_K", ("K", "r"), 1e-8,
          _run_phi_inverse_pair)
_register("specfun-monotone", "K increasing, mu decreasing, phi_K increasing",
          ("K", "r1", "r2"), 1e-15, _run_specfun_monotone)
_register("lambda-bound", "1 <= lambda(K) < exp(pi(K-1/K))", ("K",), 1e-9,
          _run_lambda_bound)
_register("eta-bound", "eta_K(t) <= lambda(K) max(t^(1/K), t^K)", ("K", "t"), 1e-9,
          _run_eta_bound)
_register("triangle-half-plane", "triangle inequality for the half-plane metric",
          ("c", "a_re", "a_im", "b_re", "b_im", "c_re", "c_im"), 1e-12,
          _run_triangle_half_plane, default_samples=2000)
_register("comp-rho", "sandwich h/c <= rho <= 2h",
          ("c", "x_re", "x_im", "y_re", "y_im", "rho"), 1e-12, _run_comp_rho,
          default_samples=2000)
_register("bridge-identity", "h equals log(1 + 2c sh(rho/2))",
          ("c", "x_re", "x_im", "y_re", "y_im"), 1e-12, _run_bridge_identity,
          default_samples=2000)
_register("subadditivity", "F(s+t) <= F(s) + F(t)", ("c", "s", "t"), 1e-12,
          _run_subadditivity)
_register("mobius-invariance", "rho is Mobius invariant",
          ("a", "b", "cc", "d", "x_re", "x_im", "y_re", "y_im"), 1e-10,
          _run_mobius_invariance, default_samples=2000)
_register("disk-triangle", "disk triangle sharpness: violations iff c < 2",
          ("c", "r1", "r2", "theta", "b_re", "b_im"), 1e-12, _run_disk_triangle,
          check=_expect_disk, default_samples=2000)
_register("bernoulli", "log(1+c1 t) <= (c1/c2) log(1+c2 t)", ("c1", "c2", "t"),
          1e-9, _run_bernoulli)
_register("prop21", "x <= c(x - 1/x) + 1", ("c", "x"), 1e-9, _run_prop21)
_register("lemma22-monotone", "log(1+c(x-1/x))/log x is decreasing",
          ("c", "x1", "x2"), 1e-12, _run_lemma22)
_register("mfprop-monotone", "F increasing, F(t)/t decreasing", ("c", "t1", "t2"),
          1e-12, _run_mfprop)
_register("arch-bounds", "two-sided log bounds for arch", ("x", "arch"), 1e-9,
          _run_arch_bounds)
_register("fuji", "log(1+2c max(t^K, t^(1/K))) <= K^(1+c) max(L, L^(1/K))",
          ("c", "K", "t"), 1e-9, _run_fuji)
_register("remark310", "the K^2 exponent fails at (K, c, t) = (1.2, 5, 0.001)",
          ("c", "K", "t", "exponent"), 1e-9, _run_remark310, check=_expect_remark310)
_register("lemmaA", "(K^(1+c))^(K/(K-1)) > 2c", ("c", "K"), 1e-9, _run_lemmaA)
_register("lemmaB1", "t^(1/K) log t >= -K/e", ("K", "t"), 1e-12, _run_lemmaB1)
_register("lemmaB1-min", "minimum -K/e located at t = e^-K",
          ("K", "t_star", "min_value"), 1e-9, _run_lemmaB1_min)
_register("lemmaB2", "K^(1+c) log(1+2ct) > log(1+2c t^(1/K)) on [(e-1)/2c, 1)",
          ("c", "K", "t"), 1e-9, _run_lemmaB2)
_register("lemmaC", "(1+2ct)^K - (1+2c t^K) increasing in K, and its log form",
          ("c", "K", "K1", "K2", "t"), 1e-9, _run_lemmaC)
_register("schwarz-chain", "the three links of the distortion proof chain",
          ("c", "K", "rho", "link1", "link2", "link3"), 1e-9, _run_schwarz_chain)
_register("distortion-stretch", "distortion bound for the radial stretch map",
          ("c", "K", "x_re", "x_im", "y_re", "y_im"), 1e-9, _run_distortion_stretch,
          default_samples=2000)
_register("distortion-mobius", "K=1 distortion: h is Mobius invariant",
          ("c", "a", "b", "cc", "d", "x_re", "x_im", "y_re", "y_im"), 1e-10,
          _run_distortion_mobius, default_samples=2000)


def _grid_desc(spec: ScanSpec, suite: Suite) -> str:
    # reproduce the axis resolution the runner performed
    parts = []
    seen = set()
    for name in spec.grids:
        parts.append(f"{name}={spec.grids[name].describe()}")
        seen.add(name)
    tol, n = _resolve(spec, suite)
    if n:
        parts.append(f"samples={n}")
    parts.append("defaults elsewhere")
    return " ".join(parts)


def run_suite(spec: ScanSpec) -> Report:
    """Run a verification suite and package the result."""
    suite = SUITES.get(spec.suite)
    if suite is None:
        raise KeyError(f"unknown suite {spec.suite!r}")
    tol, _ = _resolve(spec, suite)
    rows = suite.runner(spec, tol)
    ok, expectation = suite.check(spec, rows)
    return Report(
        suite=suite.name, version=hgf.__version__, seed=spec.seed, tol=tol,
        grid_desc=_grid_desc(spec, suite), param_names=suite.param_names,
        rows=rows, expectation=expectation, ok=ok,
    )


# -- counterexample searches ----------------------------------------------------

def _run_k2_search(spec, tol):
    cs, _ = _axis(spec, "c", C_GRID)
    Ks, _ = _axis(spec, "K", K_GRID)
    ts, _ = _axis(spec, "t", T_GRID)
    rows = []
    for c in cs:
        c = float(c)
        for K in Ks:
            K = float(K)
            for t in ts:
                t = float(t)
                lhs = math.log1p(2.0 * c * ineq._max_pow(t, K))
                L = math.log1p(2.0 * c * t)
                rhs = K * K * ineq._max_log(L, K)
                rows.append(ineq._case("k2-exponent", {"c": c, "K": K, "t": t},
                                       lhs, rhs, tol, "rel"))
    return rows


def _expect_k2(spec, rows):
    return any(not r.passed for r in rows), "at least one K^2 violation found"


SEARCHES: dict[str, Suite] = {
    "disk-triangle": Suite(
        "disk-triangle", "search for disk triangle violations (expected iff c < 2)",
        SUITES["disk-triangle"].param_names, 1e-12, _run_disk_triangle,
        _expect_disk, 2000),
    "k2-exponent": Suite(
        "k2-exponent", "scan (K, c, t) for failures of the K^2 exponent variant",
        ("c", "K", "t"), 1e-9, _run_k2_search, _expect_k2, 0),
}


def run_search(spec: ScanSpec) -> Report:
    """Run a counterexample search; the report rows are the violations only."""
    suite = SEARCHES.get(spec.suite)
    if suite is None:
        raise KeyError(f"unknown search target {spec.suite!r}")
    tol, _ = _resolve(spec, suite)
    rows = suite.runner(spec, tol)
    ok, expectation = suite.check(spec, rows)
    violations = [r for r in rows if not r.passed]
    return Report(
        suite=suite.name, version=hgf.__version__, seed=spec.seed, tol=tol,
        grid_desc=_grid_desc(spec, suite), param_names=suite.param_names,
        rows=violations, expectation=expectation, ok=ok,
    )


def suite_names() -> list[str]:
    return sorted(SUITES)
