"""Pure-Python numerical kernels.

Reference implementation of the hot loops. ``_kernels.pyx`` mirrors every
function here one-to-one; ``swe_riemann.kernels`` picks whichever is
available at import time.
"""

import math

import numpy as np

# |theta - 1| below this uses the Taylor series for b(theta)
SERIES_RADIUS = 1e-4
# two roots closer than this (relative to max(1, h2)) are reported as double
DOUBLE_ROOT_RTOL = 1e-9
# Froude numbers squared below this are still water (the small root underflows)
STILL_FR2 = 1e-250

BACKEND = "python"


def path_coefficients(theta):
    """Return ``(a, b)`` of the physical-path momentum integral."""
    eps = theta - 1.0
    if abs(eps) < SERIES_RADIUS:
        b = -0.5 + eps * (-1.0 / 3.0 + eps * (1.0 / 12.0 + eps * (-1.0 / 30.0)))
    else:
        b = theta * (eps - theta * math.log1p(eps)) / (eps * eps)
    a = -1.0 - b / theta
    return a, b


def cubic_coefficients(theta, zn, fr2):
    """Coefficients ``(c3, c2, c1, c0)`` of psi, highest power first."""
    a, b = path_coefficients(theta)
    c = 1.0 - zn
    return -b, -(a - b * c), c * a - fr2, fr2 / theta


def psi(y, theta, zn, fr2):
    c3, c2, c1, c0 = cubic_coefficients(theta, zn, fr2)
    return ((c3 * y + c2) * y + c1) * y + c0


def stationary_point(theta, zn, fr2):
    """Largest real zero of d(psi)/dy, or NaN when psi is monotone."""
    c3, c2, c1, _ = cubic_coefficients(theta, zn, fr2)
    return _stationary(c3, c2, c1)


def _stationary(c3, c2, c1):
    qa = 3.0 * c3
    qb = 2.0 * c2
    disc = qb * qb - 4.0 * qa * c1
    if disc < 0.0:
        return math.nan
    sq = math.sqrt(disc)
    if qb <= 0.0:
        return (-qb + sq) / (2.0 * qa)
    if sq + qb == 0.0:
        return 0.0
    return -2.0 * c1 / (qb + sq)


def _horner(c3, c2, c1, c0, y):
    return ((c3 * y + c2) * y + c1) * y + c0


def _refine(c3, c2, c1, c0, lo, hi, flo, x):
    """Safeguarded Newton from ``x`` on a bracket with psi(lo) of sign ``flo``."""
    if not lo < x < hi:
        x = 0.5 * (lo + hi)
    for _ in range(300):
        f = _horner(c3, c2, c1, c0, x)
        if f == 0.0:
            return x
        if (f > 0.0) == (flo > 0.0):
            lo = x
        else:
            hi = x
        df = (3.0 * c3 * x + 2.0 * c2) * x + c1
        xn = x - f / df if df != 0.0 else lo
        if not lo < xn < hi:
            xn = 0.5 * (lo + hi)
            if xn == lo or xn == hi:
                break
        if abs(xn - x) <= 1e-15 * abs(xn):
            return xn
        x = xn
    if lo > 0.0 and abs(_horner(c3, c2, c1, c0, lo)) < abs(_horner(c3, c2, c1, c0, hi)):
        return lo
    return hi


def positive_roots(theta, zn, fr2):
    """Positive zeros of psi as ``(count, h1, h2)`` with ``h1 <= h2``.

    ``count`` is 0 or 2; a double root is reported as ``h1 == h2``.
    """
    c = 1.0 - zn
    if theta == 1.0 and zn == 0.0:
        other = 0.5 * (math.sqrt(1.0 + 8.0 * fr2) - 1.0)
        if other <= 0.0:
            return 2, 1.0, 1.0
        return (2, other, 1.0) if other < 1.0 else (2, 1.0, other)
    if fr2 <= STILL_FR2:
        # psi = y * quadratic with roots 1 - [z] and -a/b < 0
        if c > 0.0:
            return 2, c, c
        return 0, math.nan, math.nan
    c3, c2, c1, c0 = cubic_coefficients(theta, zn, fr2)
    y2 = _stationary(c3, c2, c1)
    if not y2 > 0.0:
        return 0, math.nan, math.nan
    p2 = _horner(c3, c2, c1, c0, y2)
    if p2 > 0.0:
        return 0, math.nan, math.nan
    if p2 == 0.0:
        return 2, y2, y2
    # linear estimate seeds the small root, which can sit near zero
    h1 = _refine(c3, c2, c1, c0, 0.0, y2, c0, -c0 / c1 if c1 < 0.0 else 0.5 * y2)
    hi = max(2.0 * y2, 1.0)
    while _horner(c3, c2, c1, c0, hi) <= 0.0:
        hi *= 2.0
    h2 = _refine(c3, c2, c1, c0, y2, hi, p2, 0.5 * (y2 + hi))
    if h2 - h1 <= DOUBLE_ROOT_RTOL * max(1.0, h2):
        return 2, y2, y2
    return 2, h1, h2


def selection_energy(y, theta, zn):
    return max(abs(1.0 / theta - y), abs(1.0 - zn - y))


def select_root(theta, zn, fr2):
    """Pick the root minimizing the selection energy.

    Returns ``(ok, beta, which)``; ``which`` is 0 for the smaller root and 1
    for the larger one. Ties go to the larger root.
    """
    n, h1, h2 = positive_roots(theta, zn, fr2)
    if n == 0:
        return False, math.nan, -1
    if h1 == h2:
        return True, h2, 1
    if selection_energy(h1, theta, zn) < selection_energy(h2, theta, zn):
        return True, h1, 0
    return True, h2, 1


def u_w1(h, h_l, u_l, g):
    if h <= h_l:
        return u_l + 2.0 * math.sqrt(g * h_l) * (1.0 - math.sqrt(h / h_l))
    return u_l + math.sqrt(g * h_l) * (1.0 - h / h_l) * math.sqrt(0.5 * (1.0 + h_l / h))


def u_w2b(h, h_r, u_r, g):
    if h <= h_r:
        return u_r - 2.0 * math.sqrt(g * h_r) * (1.0 - math.sqrt(h / h_r))
    return u_r - math.sqrt(g * h_r) * (1.0 - h / h_r) * math.sqrt(0.5 * (1.0 + h_r / h))


def three_wave(h_minus, u_minus, theta_ratio, dz, g):
    """Stationary jump from ``(h_minus, u_minus)`` across a terrain step.

    Returns ``(ok, beta, which, h_plus, u_plus, fr2_plus)``.
    """
    fr2 = u_minus * u_minus / (g * h_minus)
    ok, beta, which = select_root(theta_ratio, dz / h_minus, fr2)
    if not ok:
        return False, math.nan, -1, math.nan, math.nan, math.nan
    h_plus = beta * h_minus
    u_plus = u_minus / (theta_ratio * beta)
    return True, beta, which, h_plus, u_plus, fr2 / (theta_ratio**2 * beta**3)


def composite_samples(hs, h_l, u_l, theta_ratio, dz, g):
    """Map each height on the 1-wave curve through the terrain jump.

    Returns arrays ``(ok, which, u_minus, h_plus, u_plus, fr2_plus)``.
    """
    hs = np.asarray(hs, dtype=float)
    n = hs.shape[0]
    ok = np.zeros(n, dtype=np.int8)
    which = np.full(n, -1, dtype=np.int8)
    u_minus = np.empty(n)
    h_plus = np.full(n, np.nan)
    u_plus = np.full(n, np.nan)
    fr2_plus = np.full(n, np.nan)
    for i in range(n):
        h = hs[i]
        u = u_w1(h, h_l, u_l, g)
        u_minus[i] = u
        res = three_wave(h, u, theta_ratio, dz, g)
        if res[0]:
            ok[i] = 1
            which[i] = res[2]
            h_plus[i] = res[3]
            u_plus[i] = res[4]
            fr2_plus[i] = res[5]
    return ok, which, u_minus, h_plus, u_plus, fr2_plus
