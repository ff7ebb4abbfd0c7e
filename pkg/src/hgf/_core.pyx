# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Twin of ``_core_py`` with the same expression trees; built with
-ffp-contract=off so both backends agree to the last few ulps.
"""

from libc.math cimport asinh, exp, fabs, log, log1p, sinh, sqrt

BACKEND_NAME = "c"

cdef double _PI = 3.141592653589793
cdef double _HALF_PI = 0.5 * 3.141592653589793
cdef double _PI_SQ_4 = 3.141592653589793 * 3.141592653589793 / 4.0
cdef double _ONE_BELOW = 0.9999999999999999  # largest double below 1


cdef double _agm(double a, double b, double rtol, int max_iter) except -1.0:
    cdef int i
    cdef double an
    for i in range(max_iter):
        if a - b <= rtol * a:
            return 0.5 * (a + b)
        an = 0.5 * (a + b)
        b = sqrt(a * b)
        a = an
    raise RuntimeError(f"AGM did not converge within {max_iter} iterations")


def agm(double a, double b, double rtol, int max_iter):
    """Arithmetic-geometric mean of a >= b > 0."""
    return _agm(a, b, rtol, max_iter)


cdef double _ellint_K(double r, double rtol, int max_iter) except -1.0:
    cdef double rc = sqrt((1.0 - r) * (1.0 + r))
    return _PI / (2.0 * _agm(1.0, rc, rtol, max_iter))


def ellint_K(double r, double rtol, int max_iter):
    return _ellint_K(r, rtol, max_iter)


cdef double _mu_agm(double r, double rtol, int max_iter) except -1.0:
    cdef double rc = sqrt((1.0 - r) * (1.0 + r))
    return _HALF_PI * _agm(1.0, rc, rtol, max_iter) / _agm(1.0, r, rtol, max_iter)


cdef double _mu(double r, double rtol, int max_iter, double r_small,
                double r_near_one) except -1.0:
    cdef double rc
    if r < r_small:
        return log(4.0 / r)
    if r > r_near_one:
        rc = sqrt((1.0 - r) * (1.0 + r))
        return _PI_SQ_4 / _mu_agm(rc, rtol, max_iter)
    return _mu_agm(r, rtol, max_iter)


def mu(double r, double rtol, int max_iter, double r_small, double r_near_one):
    return _mu(r, rtol, max_iter, r_small, r_near_one)


cdef double _mu_inv(double y, double rtol, double inv_tol, int max_iter,
                    double r_small, double r_near_one) except -1.0:
    cdef double y_hi, y_lo, rc_edge, s, r, lo, hi, mid, f, h, d, rn, step
    cdef double scale
    cdef bint converged
    cdef int i
    y_hi = log(4.0 / r_small)
    if y >= y_hi:
        return 4.0 * exp(-y)
    rc_edge = sqrt((1.0 - r_near_one) * (1.0 + r_near_one))
    y_lo = _PI_SQ_4 / _mu_agm(rc_edge, rtol, max_iter)
    if y <= y_lo:
        s = _mu_inv(_PI_SQ_4 / y, rtol, inv_tol, max_iter, r_small, r_near_one)
        r = sqrt((1.0 - s) * (1.0 + s))
        return r if r < 1.0 else _ONE_BELOW
    lo = r_small
    hi = r_near_one
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if _mu_agm(mid, rtol, max_iter) > y:
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    converged = False
    scale = 1.0 if y < 1.0 else y
    for i in range(40):
        f = _mu_agm(r, rtol, max_iter) - y
        if fabs(f) <= inv_tol * scale:
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
        step = fabs(rn - r)
        r = rn
        if step <= 1e-15 * r:
            converged = True
            break
    if not converged:
        raise RuntimeError(f"mu_inv did not converge for y={y!r}")
    return r


def mu_inv(double y, double rtol, double inv_tol, int max_iter,
           double r_small, double r_near_one):
    return _mu_inv(y, rtol, inv_tol, max_iter, r_small, r_near_one)


def phi(double K, double r, double rtol, double inv_tol, int max_iter,
        double r_small, double r_near_one):
    cdef double m = _mu(r, rtol, max_iter, r_small, r_near_one)
    return _mu_inv(m / K, rtol, inv_tol, max_iter, r_small, r_near_one)


# -- metric kernels ---------------------------------------------------------

cdef inline double _rho_half_plane(double x1, double y1, double x2, double y2) nogil:
    cdef double dx = x2 - x1
    cdef double dy = y2 - y1
    cdef double q = sqrt(dx * dx + dy * dy) / (2.0 * sqrt(y1 * y2))
    return 2.0 * asinh(q)


cdef inline double _h_half_plane(double c, double x1, double y1,
                                 double x2, double y2) nogil:
    cdef double dx = x2 - x1
    cdef double dy = y2 - y1
    return log1p(c * sqrt(dx * dx + dy * dy) / sqrt(y1 * y2))


def rho_half_plane(double x1, double y1, double x2, double y2):
    return _rho_half_plane(x1, y1, x2, y2)


def rho_disk(double ax, double ay, double bx, double by):
    cdef double dx = ax - bx
    cdef double dy = ay - by
    cdef double da = 1.0 - (ax * ax + ay * ay)
    cdef double db = 1.0 - (bx * bx + by * by)
    return 2.0 * asinh(sqrt(dx * dx + dy * dy) / sqrt(da * db))


def h_half_plane(double c, double x1, double y1, double x2, double y2):
    return _h_half_plane(c, x1, y1, x2, y2)


def h_disk(double c, double ax, double ay, double bx, double by):
    cdef double dx = ax - bx
    cdef double dy = ay - by
    cdef double da = 1.0 - sqrt(ax * ax + ay * ay)
    cdef double db = 1.0 - sqrt(bx * bx + by * by)
    return log1p(c * sqrt(dx * dx + dy * dy) / sqrt(da * db))


def h_from_rho(double c, double rho):
    return log1p(2.0 * c * sinh(0.5 * rho))


# -- batch kernels ----------------------------------------------------------

def h_pairs_half_plane(double c, double[::1] ax, double[::1] ay,
                       double[::1] bx, double[::1] by, double[::1] out):
    cdef Py_ssize_t i, n = ax.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _h_half_plane(c, ax[i], ay[i], bx[i], by[i])
    return out.base if out.base is not None else out


def rho_pairs_half_plane(double[::1] ax, double[::1] ay,
                         double[::1] bx, double[::1] by, double[::1] out):
    cdef Py_ssize_t i, n = ax.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _rho_half_plane(ax[i], ay[i], bx[i], by[i])
    return out.base if out.base is not None else out


def triangle_margins_half_plane(double c, double[::1] ax, double[::1] ay,
                                double[::1] bx, double[::1] by,
                                double[::1] cx, double[::1] cy, double[::1] out):
    """out[i] = h(a,b) + h(b,c) - h(a,c) for row-wise half-plane triples."""
    cdef Py_ssize_t i, n = ax.shape[0]
    with nogil:
        for i in range(n):
            out[i] = (_h_half_plane(c, ax[i], ay[i], bx[i], by[i])
                      + _h_half_plane(c, bx[i], by[i], cx[i], cy[i])
                      - _h_half_plane(c, ax[i], ay[i], cx[i], cy[i]))
    return out.base if out.base is not None else out
