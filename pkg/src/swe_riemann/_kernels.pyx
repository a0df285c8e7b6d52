# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels; mirrors ``_kernels_py`` function for function."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, log1p, fabs, NAN, fmax

cnp.import_array()

cdef double SERIES_RADIUS_C = 1e-4
cdef double DOUBLE_ROOT_RTOL_C = 1e-9
cdef double STILL_FR2_C = 1e-250

SERIES_RADIUS = SERIES_RADIUS_C
DOUBLE_ROOT_RTOL = DOUBLE_ROOT_RTOL_C
STILL_FR2 = STILL_FR2_C
BACKEND = "cython"


cdef inline void _coef_ab(double theta, double* a, double* b) nogil:
    cdef double eps = theta - 1.0
    if fabs(eps) < SERIES_RADIUS_C:
        b[0] = -0.5 + eps * (-1.0 / 3.0 + eps * (1.0 / 12.0 + eps * (-1.0 / 30.0)))
    else:
        b[0] = theta * (eps - theta * log1p(eps)) / (eps * eps)
    a[0] = -1.0 - b[0] / theta


cdef inline void _cubic(double theta, double zn, double fr2,
                        double* c3, double* c2, double* c1, double* c0) nogil:
    cdef double a, b, c
    _coef_ab(theta, &a, &b)
    c = 1.0 - zn
    c3[0] = -b
    c2[0] = -(a - b * c)
    c1[0] = c * a - fr2
    c0[0] = fr2 / theta


cdef inline double _horner(double c3, double c2, double c1, double c0, double y) nogil:
    return ((c3 * y + c2) * y + c1) * y + c0


cdef inline double _stationary(double c3, double c2, double c1) nogil:
    cdef double qa = 3.0 * c3
    cdef double qb = 2.0 * c2
    cdef double disc = qb * qb - 4.0 * qa * c1
    cdef double sq
    if disc < 0.0:
        return NAN
    sq = sqrt(disc)
    if qb <= 0.0:
        return (-qb + sq) / (2.0 * qa)
    if sq + qb == 0.0:
        return 0.0
    return -2.0 * c1 / (qb + sq)


cdef double _refine(double c3, double c2, double c1, double c0,
                    double lo, double hi, double flo, double x) nogil:
    cdef double f, df, xn
    cdef int it
    if not (lo < x < hi):
        x = 0.5 * (lo + hi)
    for it in range(300):
        f = _horner(c3, c2, c1, c0, x)
        if f == 0.0:
            return x
        if (f > 0.0) == (flo > 0.0):
            lo = x
        else:
            hi = x
        df = (3.0 * c3 * x + 2.0 * c2) * x + c1
        if df != 0.0:
            xn = x - f / df
        else:
            xn = lo
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
            if xn == lo or xn == hi:
                break
        if fabs(xn - x) <= 1e-15 * fabs(xn):
            return xn
        x = xn
    if lo > 0.0 and fabs(_horner(c3, c2, c1, c0, lo)) < fabs(_horner(c3, c2, c1, c0, hi)):
        return lo
    return hi


cdef int _positive_roots(double theta, double zn, double fr2,
                         double* h1, double* h2) nogil:
    cdef double c = 1.0 - zn
    cdef double other, c3, c2, c1, c0, y2, p2, hi
    h1[0] = NAN
    h2[0] = NAN
    if theta == 1.0 and zn == 0.0:
        other = 0.5 * (sqrt(1.0 + 8.0 * fr2) - 1.0)
        if other <= 0.0:
            h1[0] = 1.0
            h2[0] = 1.0
        elif other < 1.0:
            h1[0] = other
            h2[0] = 1.0
        else:
            h1[0] = 1.0
            h2[0] = other
        return 2
    if fr2 <= STILL_FR2_C:
        if c > 0.0:
            h1[0] = c
            h2[0] = c
            return 2
        return 0
    _cubic(theta, zn, fr2, &c3, &c2, &c1, &c0)
    y2 = _stationary(c3, c2, c1)
    if not y2 > 0.0:
        return 0
    p2 = _horner(c3, c2, c1, c0, y2)
    if p2 > 0.0:
        return 0
    if p2 == 0.0:
        h1[0] = y2
        h2[0] = y2
        return 2
    h1[0] = _refine(c3, c2, c1, c0, 0.0, y2, c0, -c0 / c1 if c1 < 0.0 else 0.5 * y2)
    hi = fmax(2.0 * y2, 1.0)
    while _horner(c3, c2, c1, c0, hi) <= 0.0:
        hi *= 2.0
    h2[0] = _refine(c3, c2, c1, c0, y2, hi, p2, 0.5 * (y2 + hi))
    if h2[0] - h1[0] <= DOUBLE_ROOT_RTOL_C * fmax(1.0, h2[0]):
        h1[0] = y2
        h2[0] = y2
    return 2


cdef inline double _energy(double y, double theta, double zn) nogil:
    return fmax(fabs(1.0 / theta - y), fabs(1.0 - zn - y))


cdef int _select(double theta, double zn, double fr2, double* beta) nogil:
    """Return -1 when no root, else 0 (smaller root) or 1 (larger root)."""
    cdef double h1, h2
    cdef int n = _positive_roots(theta, zn, fr2, &h1, &h2)
    if n == 0:
        beta[0] = NAN
        return -1
    if h1 == h2:
        beta[0] = h2
        return 1
    if _energy(h1, theta, zn) < _energy(h2, theta, zn):
        beta[0] = h1
        return 0
    beta[0] = h2
    return 1


cdef inline double _u_w1(double h, double h_l, double u_l, double g) nogil:
    if h <= h_l:
        return u_l + 2.0 * sqrt(g * h_l) * (1.0 - sqrt(h / h_l))
    return u_l + sqrt(g * h_l) * (1.0 - h / h_l) * sqrt(0.5 * (1.0 + h_l / h))


cdef inline double _u_w2b(double h, double h_r, double u_r, double g) nogil:
    if h <= h_r:
        return u_r - 2.0 * sqrt(g * h_r) * (1.0 - sqrt(h / h_r))
    return u_r - sqrt(g * h_r) * (1.0 - h / h_r) * sqrt(0.5 * (1.0 + h_r / h))


def path_coefficients(double theta):
    """Return ``(a, b)`` of the physical-path momentum integral."""
    cdef double a, b
    _coef_ab(theta, &a, &b)
    return a, b


def cubic_coefficients(double theta, double zn, double fr2):
    cdef double c3, c2, c1, c0
    _cubic(theta, zn, fr2, &c3, &c2, &c1, &c0)
    return c3, c2, c1, c0


def psi(double y, double theta, double zn, double fr2):
    cdef double c3, c2, c1, c0
    _cubic(theta, zn, fr2, &c3, &c2, &c1, &c0)
    return _horner(c3, c2, c1, c0, y)


def stationary_point(double theta, double zn, double fr2):
    cdef double c3, c2, c1, c0
    _cubic(theta, zn, fr2, &c3, &c2, &c1, &c0)
    return _stationary(c3, c2, c1)


def positive_roots(double theta, double zn, double fr2):
    cdef double h1, h2
    cdef int n = _positive_roots(theta, zn, fr2, &h1, &h2)
    return n, h1, h2


def selection_energy(double y, double theta, double zn):
    return _energy(y, theta, zn)


def select_root(double theta, double zn, double fr2):
    cdef double beta
    cdef int which = _select(theta, zn, fr2, &beta)
    return which >= 0, beta, which


def u_w1(double h, double h_l, double u_l, double g):
    return _u_w1(h, h_l, u_l, g)


def u_w2b(double h, double h_r, double u_r, double g):
    return _u_w2b(h, h_r, u_r, g)


def three_wave(double h_minus, double u_minus, double theta_ratio, double dz, double g):
    cdef double fr2 = u_minus * u_minus / (g * h_minus)
    cdef double beta
    cdef int which = _select(theta_ratio, dz / h_minus, fr2, &beta)
    if which < 0:
        return False, NAN, -1, NAN, NAN, NAN
    return (True, beta, which, beta * h_minus, u_minus / (theta_ratio * beta),
            fr2 / (theta_ratio * theta_ratio * beta * beta * beta))


def composite_samples(hs, double h_l, double u_l, double theta_ratio, double dz, double g):
    cdef double[::1] hv = np.ascontiguousarray(hs, dtype=np.float64)
    cdef Py_ssize_t n = hv.shape[0]
    ok_a = np.zeros(n, dtype=np.int8)
    which_a = np.full(n, -1, dtype=np.int8)
    um_a = np.empty(n)
    hp_a = np.full(n, np.nan)
    up_a = np.full(n, np.nan)
    fp_a = np.full(n, np.nan)
    cdef signed char[::1] ok = ok_a
    cdef signed char[::1] which = which_a
    cdef double[::1] um = um_a
    cdef double[::1] hp = hp_a
    cdef double[::1] up = up_a
    cdef double[::1] fp = fp_a
    cdef Py_ssize_t i
    cdef double h, u, fr2, beta
    cdef int w
    with nogil:
        for i in range(n):
            h = hv[i]
            u = _u_w1(h, h_l, u_l, g)
            um[i] = u
            fr2 = u * u / (g * h)
            w = _select(theta_ratio, dz / h, fr2, &beta)
            if w >= 0:
                ok[i] = 1
                which[i] = w
                hp[i] = beta * h
                up[i] = u / (theta_ratio * beta)
                fp[i] = fr2 / (theta_ratio * theta_ratio * beta * beta * beta)
    return ok_a, which_a, um_a, hp_a, up_a, fp_a
