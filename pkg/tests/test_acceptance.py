"""Acceptance criteria, one test per criterion, at their stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.  Sampled criteria use the fixed seed below; grids are the
documented suite defaults.
"""

import math
import os
import subprocess
import sys

import numpy as np

from hgf import ineq, specfun, suites
from hgf.report import GridSpec, ScanSpec

SEED = 20250810
CLI = [sys.executable, "-m", "hgf"]


def _report(num, ok, desc):
    print(f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_01_specfun_identities():
    ok = True
    for r in np.geomspace(1e-6, 1.0 - 1e-6, 41):
        r = float(r)
        ok &= abs(specfun.phi_K(1.0, r) - r) <= 1e-9
        ok &= abs(specfun.mu_inv(specfun.mu(r)) - r) <= 1e-9
    ok &= abs(specfun.mu(1.0 / math.sqrt(2.0)) - math.pi / 2.0) <= 1e-9
    for r in np.geomspace(1e-3, 1.0 - 1e-3, 41):
        r = float(r)
        prod = specfun.mu(r) * specfun.mu(math.sqrt(1.0 - r * r))
        ok &= abs(prod - math.pi**2 / 4.0) <= 1e-9
    _report(1, ok, "phi_1 = id, mu(1/sqrt2) = pi/2, reflection product, "
                   "round trip, all within 1e-9 on documented grids")


def test_criterion_02_lambda_bounds():
    ok = specfun.lambda_K(1.0) == 1.0
    for K in (1.01, 1.1, 1.5, 2.0, 3.0, 5.0):
        lam = specfun.lambda_K(K)
        ok &= 1.0 <= lam < math.exp(math.pi * (K - 1.0 / K))
    _report(2, ok, "lambda(1) = 1 exactly; 1 <= lambda(K) < exp(pi(K - 1/K))")


def test_criterion_03_eta_bound():
    ok = True
    for K in suites.K_GRID:
        lam = specfun.lambda_K(K)
        for t in suites.ETA_T_GRID.points():
            t = float(t)
            bound = lam * max(t**K, t ** (1.0 / K))
            ok &= specfun.eta_K(K, t) <= bound * (1.0 + 1e-9)
    _report(3, ok, "eta_K(t) <= lambda(K) max(t^(1/K), t^K) (1 + 1e-9) on the "
                   "default K x t grid")


def test_criterion_04_half_plane_triangle():
    rep = suites.run_suite(ScanSpec(suite="triangle-half-plane",
                                    samples=100_000, seed=SEED, tol=1e-12))
    ok = rep.ok and rep.violations == 0 and rep.total >= 4 * 100_000
    _report(4, ok, f"no triangle violations for c in (1, 1.5, 2, 5) over "
                   f"{rep.total} random-triple cases (tol 1e-12)")


def test_criterion_05_disk_sharpness():
    found = suites.run_search(ScanSpec(suite="disk-triangle", samples=2000,
                                       seed=SEED, grids={"c": GridSpec(1.0, 1.0, 1)}))
    clean = suites.run_search(ScanSpec(suite="disk-triangle", samples=2000,
                                       seed=SEED, grids={"c": GridSpec(2.0, 2.0, 1)}))
    ok = found.total >= 1 and clean.total == 0 and found.ok and clean.ok
    _report(5, ok, f"disk search: c=1 finds {found.total} violating triples, "
                   f"c=2 finds none")


def test_criterion_06_metric_sandwich():
    rep = suites.run_suite(ScanSpec(suite="comp-rho", samples=100_000,
                                    seed=SEED, tol=1e-12))
    ok = rep.ok and rep.violations == 0 and rep.total == 3 * 100_000
    _report(6, ok, "h/c <= rho <= 2h on 1e5 random pairs for c in (1, 2, 10) "
                   "(tol 1e-12)")


def test_criterion_07_bernoulli_type_suites():
    ok = True
    for name in ("fuji", "lemmaA", "lemmaB1", "lemmaB2", "lemmaC"):
        rep = suites.run_suite(ScanSpec(suite=name, seed=SEED))
        ok &= rep.ok and rep.violations == 0
    rep = suites.run_suite(ScanSpec(suite="lemmaB1-min", seed=SEED))
    ok &= rep.ok and rep.violations == 0
    _report(7, ok, "fuji and lemma suites clean; B1 minimum -K/e within 1e-6, "
                   "located within 1e-4 relative of e^-K")


def test_criterion_08_remark310():
    k2 = ineq.remark310_case()
    companion = ineq.fuji_case(5.0, 1.2, 0.001)
    ok = (not k2.passed) and k2.lhs > k2.rhs and companion.passed
    ok &= abs(k2.lhs - 0.031133073689502298) <= 1e-12
    ok &= abs(k2.rhs - 0.030895395563543060) <= 1e-12
    _report(8, ok, f"K^2 variant violated at (1.2, 5, 0.001): "
                   f"lhs {k2.lhs:.9f} > rhs {k2.rhs:.9f}; K^(1+c) variant passes")


def test_criterion_09_schwarz_chain():
    rep = suites.run_suite(ScanSpec(suite="schwarz-chain", seed=SEED))
    ok = rep.ok and rep.violations == 0
    ok &= all(min(r.params["link1"], r.params["link2"], r.params["link3"]) == r.margin
              for r in rep.rows)
    _report(9, ok, "all three chain links nonnegative over c <= 10, K <= 8, "
                   "rho <= 30")


def test_criterion_10_empirical_distortion():
    mob = suites.run_suite(ScanSpec(suite="distortion-mobius", samples=5000,
                                    seed=SEED, tol=1e-10))
    stretch = suites.run_suite(ScanSpec(suite="distortion-stretch", samples=10_000,
                                        seed=SEED, grids={"c": GridSpec(1.0, 1.0, 1)}))
    ok = mob.ok and mob.violations == 0
    ok &= stretch.ok and stretch.violations == 0 and stretch.total == 3 * 10_000
    _report(10, ok, "Mobius maps preserve h to 1e-10; radial stretch satisfies "
                    "the bound on 1e4 pairs for K in (1.25, 2, 4)")


def test_criterion_11_cli_contract(tmp_path):
    env = dict(os.environ)
    env.pop("HGF_SEED", None)

    def cli(*args):
        return subprocess.run([*CLI, *args], capture_output=True, text=True, env=env)

    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    r1 = cli("verify", "fuji", "--seed", "42", "--out", str(out1))
    r2 = cli("verify", "fuji", "--seed", "42", "--out", str(out2))
    ok = r1.returncode == 0 and r2.returncode == 0
    ok &= out1.read_bytes() == out2.read_bytes()
    ok &= cli("verify", "remark310").returncode == 0
    ok &= cli("verify", "remark310", "--tol", "1.0").returncode == 1
    ok &= cli("verify", "no-such-suite").returncode == 2
    _report(11, ok, "byte-identical CSV on repeated seeded runs; exit codes "
                    "0 (pass), 0 (expected violation), 1 (mis-tolerated), 2 (bad spec)")
