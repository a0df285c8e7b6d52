"""Kernel-level checks, run against every available backend."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swe_riemann import HydraulicState, TerrainSide, kernels, verify_generalized_rh

from .conftest import BACKENDS, G

thetas = st.floats(0.05, 20.0)
jumps = st.floats(-0.9, 0.9)
froudes = st.floats(0.0, 4.0)


def test_selected_backend_is_reported():
    assert kernels.BACKEND in {"python", "cython"}


@pytest.mark.parametrize("theta", [0.01, 0.3, 0.9, 0.99999, 1.0, 1.00001, 2.0, 50.0])
def test_path_coefficients_identity(kern, theta):
    a, b = kern.path_coefficients(theta)
    assert a + b / theta == pytest.approx(-1.0, abs=1e-12)
    assert a < 0.0 and b < 0.0


def test_path_coefficient_at_two_frozen(kern):
    a, b = kern.path_coefficients(2.0)
    assert b == pytest.approx(-0.7725887222397811, abs=1e-13)
    assert a == pytest.approx(-0.6137056388801094, abs=1e-13)


def _b_high_precision(theta):
    with mpmath.workdps(50):
        t = mpmath.mpf(theta)
        return float(t * (t - 1 - t * mpmath.log(t)) / (t - 1) ** 2)


def test_b_against_high_precision(kern):
    near = np.geomspace(1e-9, 1e-2, 200)
    grid = np.concatenate([np.geomspace(1e-2, 1e2, 400), 1.0 + near, 1.0 - near])
    for theta in grid:
        assert abs(kern.path_coefficients(float(theta))[1] - _b_high_precision(float(theta))) < 5e-12


def test_psi_is_path_integral_residual(kern):
    """psi(y)/y times theta- g h-^2 equals the quadrature momentum residual."""
    rng = np.random.default_rng(7)
    for _ in range(200):
        theta = float(np.exp(rng.uniform(-2, 2)))
        zn = float(rng.uniform(-0.8, 0.8))
        fr2 = float(rng.uniform(0.0, 3.0))
        y = float(rng.uniform(0.1, 3.0))
        h_m = float(rng.uniform(0.2, 2.0))
        u_m = math.sqrt(fr2 * G * h_m)
        minus = HydraulicState(h_m, u_m)
        plus = HydraulicState(y * h_m, u_m / (theta * y))
        _, r_mom = verify_generalized_rh(minus, plus, TerrainSide(1.0, 0.0), TerrainSide(theta, zn * h_m), G)
        expected = G * h_m**2 * kern.psi(y, theta, zn, fr2) / y
        assert r_mom == pytest.approx(expected, rel=1e-9, abs=1e-11)


@given(thetas, jumps, froudes)
@settings(max_examples=300, deadline=None)
def test_roots_match_numpy_roots(theta, zn, fr2):
    for kern in BACKENDS:
        n, h1, h2 = kern.positive_roots(theta, zn, fr2)
        coeffs = kern.cubic_coefficients(theta, zn, fr2)
        ref = sorted(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-7 * max(1, abs(r)) and r.real > 1e-12)
        if n == 0:
            # allow np.roots to see a tangential pair our solver rejects
            assert len(ref) == 0 or (len(ref) == 2 and abs(ref[1] - ref[0]) < 1e-4)
            continue
        assert h1 <= h2
        for h in (h1, h2):
            assert abs(kern.psi(h, theta, zn, fr2)) <= 1e-9 * max(1.0, abs(coeffs[3]), h**3)
        if fr2 > 0.0 and h1 != h2 and len(ref) == 2:
            assert h1 == pytest.approx(ref[0], rel=1e-6)
            assert h2 == pytest.approx(ref[1], rel=1e-6)


@given(thetas, jumps, froudes)
@settings(max_examples=200, deadline=None)
def test_backends_agree(theta, zn, fr2):
    results = [k.select_root(theta, zn, fr2) for k in BACKENDS]
    ref = results[0]
    for r in results[1:]:
        assert r[0] == ref[0] and r[2] == ref[2]
        if ref[0]:
            assert r[1] == pytest.approx(ref[1], rel=1e-13)


def test_composite_samples_agree_between_backends():
    hs = np.linspace(1.0, 4.0 / 9.0, 301)
    outs = [k.composite_samples(hs, 1.0, 0.0, 0.5, 0.2, G) for k in BACKENDS]
    for other in outs[1:]:
        for x, y in zip(outs[0], other):
            np.testing.assert_allclose(x, y, rtol=1e-12, equal_nan=True)


def test_flat_terrain_roots_closed_form(kern):
    n, h1, h2 = kern.positive_roots(1.0, 0.0, 2.0)
    assert n == 2
    assert (h1, h2) == (1.0, pytest.approx(0.5 * (math.sqrt(17.0) - 1.0), rel=1e-15))


def test_still_water_root(kern):
    n, h1, h2 = kern.positive_roots(0.7, 0.3, 0.0)
    assert n == 2 and h1 == h2 == pytest.approx(0.7)


def test_wave_curve_kernels(kern):
    assert kern.u_w1(1.0, 1.0, 0.3, G) == 0.3
    assert kern.u_w2b(1.0, 1.0, -0.3, G) == -0.3
    # sonic point of still water: u = sqrt(g h) at h = 4/9
    h = 4.0 / 9.0
    assert kern.u_w1(h, 1.0, 0.0, G) == pytest.approx(math.sqrt(G * h), rel=1e-14)
