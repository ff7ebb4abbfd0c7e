"""Cross-checks between the compiled kernel backend and the pure-Python twin."""

import os
import subprocess
import sys

import numpy as np
import pytest

import hgf
from hgf import _core_py

try:
    from hgf import _core
    HAVE_C = True
except ImportError:
    _core = None
    HAVE_C = False

needs_c = pytest.mark.skipif(not HAVE_C, reason="compiled backend not built")

CFG = (1e-15, 200, 1e-8, 1.0 - 1e-8)  # rtol, max_iter, r_small, r_near_one


def both():
    return [_core_py] + ([_core] if HAVE_C else [])


@needs_c
def test_scalar_kernels_agree():
    rtol, mi, rs, rn = CFG
    for r in np.geomspace(1e-9, 1.0 - 1e-9, 400):
        r = float(r)
        assert _core.mu(r, rtol, mi, rs, rn) == pytest.approx(
            _core_py.mu(r, rtol, mi, rs, rn), rel=1e-13)
        assert _core.ellint_K(r, rtol, mi) == pytest.approx(
            _core_py.ellint_K(r, rtol, mi), rel=1e-13)
    for y in np.geomspace(1e-4, 100.0, 300):
        y = float(y)
        assert _core.mu_inv(y, rtol, 1e-12, mi, rs, rn) == pytest.approx(
            _core_py.mu_inv(y, rtol, 1e-12, mi, rs, rn), rel=1e-12)
    for K in (0.25, 1.0, 2.0, 8.0):
        for r in (0.05, 0.5, 0.9):
            assert _core.phi(K, r, rtol, 1e-12, mi, rs, rn) == pytest.approx(
                _core_py.phi(K, r, rtol, 1e-12, mi, rs, rn), rel=1e-12)


@needs_c
def test_metric_kernels_agree():
    rng = np.random.default_rng(31415)
    for _ in range(200):
        x1, x2 = rng.uniform(-10, 10, 2)
        y1, y2 = rng.uniform(0.01, 10, 2)
        assert _core.rho_half_plane(x1, y1, x2, y2) == pytest.approx(
            _core_py.rho_half_plane(x1, y1, x2, y2), rel=1e-14, abs=1e-300)
        assert _core.h_half_plane(2.0, x1, y1, x2, y2) == pytest.approx(
            _core_py.h_half_plane(2.0, x1, y1, x2, y2), rel=1e-14, abs=1e-300)
        assert _core.h_from_rho(3.0, y1) == pytest.approx(
            _core_py.h_from_rho(3.0, y1), rel=1e-14)
    for _ in range(200):
        a = rng.uniform(-0.7, 0.7, 2)
        b = rng.uniform(-0.7, 0.7, 2)
        assert _core.rho_disk(*a, *b) == pytest.approx(
            _core_py.rho_disk(*a, *b), rel=1e-13, abs=1e-300)
        assert _core.h_disk(1.5, *a, *b) == pytest.approx(
            _core_py.h_disk(1.5, *a, *b), rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("backend", both(), ids=lambda m: m.BACKEND_NAME)
def test_batch_consistent_with_scalar(backend):
    rng = np.random.default_rng(2718)
    n = 500
    ax, bx, cx = (rng.uniform(-10, 10, n) for _ in range(3))
    ay, by, cy = (rng.uniform(0.01, 10, n) for _ in range(3))
    out = np.empty(n)
    backend.h_pairs_half_plane(1.5, ax, ay, bx, by, out)
    for i in range(0, n, 37):
        assert out[i] == pytest.approx(
            backend.h_half_plane(1.5, ax[i], ay[i], bx[i], by[i]), rel=1e-14)
    backend.rho_pairs_half_plane(ax, ay, bx, by, out)
    for i in range(0, n, 37):
        assert out[i] == pytest.approx(
            backend.rho_half_plane(ax[i], ay[i], bx[i], by[i]), rel=1e-14)
    backend.triangle_margins_half_plane(1.5, ax, ay, bx, by, cx, cy, out)
    for i in range(0, n, 37):
        expect = (backend.h_half_plane(1.5, ax[i], ay[i], bx[i], by[i])
                  + backend.h_half_plane(1.5, bx[i], by[i], cx[i], cy[i])
                  - backend.h_half_plane(1.5, ax[i], ay[i], cx[i], cy[i]))
        assert out[i] == pytest.approx(expect, rel=1e-12, abs=1e-13)


@needs_c
def test_batch_kernels_agree():
    rng = np.random.default_rng(577)
    n = 2000
    ax, bx, cx = (rng.uniform(-10, 10, n) for _ in range(3))
    ay, by, cy = (rng.uniform(0.01, 10, n) for _ in range(3))
    o1, o2 = np.empty(n), np.empty(n)
    _core.triangle_margins_half_plane(2.0, ax, ay, bx, by, cx, cy, o1)
    _core_py.triangle_margins_half_plane(2.0, ax, ay, bx, by, cx, cy, o2)
    assert np.max(np.abs(o1 - o2)) < 1e-13


def test_backend_forcing_env_var():
    code = "import hgf; print(hgf.backend_name())"
    env = dict(os.environ, HGF_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    if HAVE_C:
        env = dict(os.environ, HGF_BACKEND="c")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.stdout.strip() == "c"


def test_active_backend_reported():
    assert hgf.backend_name() in ("c", "python")
