"""Stationary jump across a porosity / bed-elevation discontinuity.

Across ``x = 0`` mass flux ``theta h u`` is conserved and momentum balances
against the nonconservative product integrated along the physical path.
With nondimensional downstream height ``y = h+/h-``, the momentum balance
reduces to the cubic ``psi(y) = 0``; its positive roots are the candidate
downstream states and the selection energy picks one of them.

All functions here work in nondimensional variables:

* ``theta``        porosity ratio ``theta+/theta-``
* ``z_jump_norm``  bed step ``(z+ - z-)/h-``
* ``fr2_minus``    upstream Froude number squared ``u-**2/(g h-)``
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .core import DEFAULT_G, HydraulicState, TerrainSide, check_height
from .errors import NonPositiveTheta, NoTerrainSolution, WrongRegime


@dataclass(frozen=True)
class TerrainJumpParams:
    theta: float
    z_jump_norm: float
    fr2_minus: float

    def __post_init__(self):
        if not self.theta > 0.0:
            raise NonPositiveTheta(f"theta must be positive, got {self.theta}", "theta")
        if not self.fr2_minus >= 0.0:
            raise ValueError(f"fr2_minus must be non-negative, got {self.fr2_minus}")

    @classmethod
    def from_states(
        cls,
        minus: HydraulicState,
        terrain_minus: TerrainSide,
        terrain_plus: TerrainSide,
        g: float = DEFAULT_G,
    ) -> TerrainJumpParams:
        return cls(
            terrain_plus.theta / terrain_minus.theta,
            (terrain_plus.z - terrain_minus.z) / minus.h,
            minus.u * minus.u / (g * minus.h),
        )

    @property
    def free_surface_target(self) -> float:
        """``1 - [z]``: the downstream height that keeps the surface flat."""
        return 1.0 - self.z_jump_norm

    @property
    def low_theta_regime(self) -> bool:
        """True when ``1/theta <= 1 - [z]`` (two roots for every Froude number)."""
        return 1.0 / self.theta <= self.free_surface_target


@dataclass(frozen=True)
class PathCoefficients:
    a: float
    b: float


class RootCase(str, enum.Enum):
    TWO_ROOTS_LOW_THETA = "TwoRootsLowTheta"
    TWO_ROOTS_BELOW = "TwoRootsBelow"
    TWO_ROOTS_ABOVE = "TwoRootsAbove"
    NO_ROOTS = "NoRoots"


@dataclass(frozen=True)
class RootClassification:
    case: RootCase
    roots: tuple[float, ...]
    fr2_crit_low: float | None = None
    fr2_crit_high: float | None = None


@dataclass(frozen=True)
class ThreeWaveResult:
    beta: float
    plus_state: HydraulicState
    fr2_plus: float
    selection_energy: float
    which: int  # 0: smaller root selected, 1: larger root


def path_coefficients(theta: float) -> PathCoefficients:
    if not theta > 0.0:
        raise NonPositiveTheta(f"theta must be positive, got {theta}", "theta")
    a, b = kernels.path_coefficients(theta)
    return PathCoefficients(a, b)


def psi_eval(y: float, p: TerrainJumpParams) -> float:
    return kernels.psi(y, p.theta, p.z_jump_norm, p.fr2_minus)


def selection_energy(y: float, p: TerrainJumpParams) -> float:
    """Largest of the free-surface and velocity mismatches at height ratio ``y``."""
    return kernels.selection_energy(y, p.theta, p.z_jump_norm)


def psi_minimum(theta: float, z_jump_norm: float, fr2: float) -> float:
    """Minimum of psi over ``y >= 0``.

    Negative means two positive roots, positive means none.
    """
    y2 = kernels.stationary_point(theta, z_jump_norm, fr2)
    if not y2 > 0.0:
        return fr2 / theta
    return kernels.psi(y2, theta, z_jump_norm, fr2)


def froude_at_maximum(theta: float, z_jump_norm: float) -> float:
    """Froude number squared at which the minimum of psi is largest.

    At this value the stationary point of psi sits exactly at ``1/theta``.
    """
    a, _ = kernels.path_coefficients(theta)
    return 1.0 / theta + (a + 2.0) * (1.0 / theta - (1.0 - z_jump_norm))


def critical_froude_numbers(theta: float, z_jump_norm: float) -> tuple[float, float]:
    """Edges ``(low, high)`` of the Froude-squared gap with no terrain solution.

    Only exists when ``1/theta > 1 - [z]``. ``low`` is 0 when the bed step
    is so high that small Froude numbers have no solution either.
    """
    if not theta > 0.0:
        raise NonPositiveTheta(f"theta must be positive, got {theta}", "theta")
    if not 1.0 / theta > 1.0 - z_jump_norm:
        raise WrongRegime("critical Froude numbers need 1/theta > 1 - [z]", "z_jump_norm")
    eta = froude_at_maximum(theta, z_jump_norm)

    def f(fr2):
        return psi_minimum(theta, z_jump_norm, fr2)

    if f(0.0) >= 0.0:
        low = 0.0
    else:
        low = brentq(f, 0.0, eta, xtol=1e-15, rtol=1e-15, maxiter=500)
    hi = 2.0 * eta + 1.0
    while f(hi) >= 0.0:
        hi *= 2.0
    high = brentq(f, eta, hi, xtol=1e-15, rtol=1e-15, maxiter=500)
    return low, high


def classify_and_solve(p: TerrainJumpParams) -> RootClassification:
    """Positive roots of psi, labelled by parameter regime."""
    n, h1, h2 = kernels.positive_roots(p.theta, p.z_jump_norm, p.fr2_minus)
    roots = (h1, h2) if n else ()
    if p.low_theta_regime:
        case = RootCase.TWO_ROOTS_LOW_THETA if n else RootCase.NO_ROOTS
        return RootClassification(case, roots)
    low, high = critical_froude_numbers(p.theta, p.z_jump_norm)
    if not n:
        case = RootCase.NO_ROOTS
    elif p.fr2_minus < froude_at_maximum(p.theta, p.z_jump_norm):
        case = RootCase.TWO_ROOTS_BELOW
    else:
        case = RootCase.TWO_ROOTS_ABOVE
    return RootClassification(case, roots, low, high)


def tilde_fr(theta: float, z_jump_norm: float) -> float:
    """Froude number squared at which both roots have equal selection energy."""
    c = 1.0 - z_jump_norm
    if not 1.0 / theta <= c:
        raise WrongRegime("tilde_fr needs 1/theta <= 1 - [z]", "z_jump_norm")
    _, b = kernels.path_coefficients(theta)
    return 1.0 / theta + (-b / (-b + theta)) * (c - 1.0 / theta)


def solve_w3(
    minus: HydraulicState,
    terrain_minus: TerrainSide,
    terrain_plus: TerrainSide,
    g: float = DEFAULT_G,
) -> ThreeWaveResult:
    """Downstream state of the stationary terrain jump.

    Raises :class:`NoTerrainSolution` when psi has no positive root.
    """
    check_height(minus.h, "minus.h")
    if terrain_minus == terrain_plus:
        return ThreeWaveResult(1.0, minus, minus.u * minus.u / (g * minus.h), 0.0, 1)
    p = TerrainJumpParams.from_states(minus, terrain_minus, terrain_plus, g)
    ok, beta, which = kernels.select_root(p.theta, p.z_jump_norm, p.fr2_minus)
    if not ok:
        raise NoTerrainSolution(
            f"no positive root for theta={p.theta:.6g}, [z]={p.z_jump_norm:.6g}, "
            f"Fr^2={p.fr2_minus:.6g}"
        )
    plus = HydraulicState(beta * minus.h, minus.u / (p.theta * beta))
    fr2_plus = p.fr2_minus / (p.theta**2 * beta**3)
    return ThreeWaveResult(beta, plus, fr2_plus, selection_energy(beta, p), which)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)


def verify_generalized_rh(
    minus: HydraulicState,
    plus: HydraulicState,
    terrain_minus: TerrainSide,
    terrain_plus: TerrainSide,
    g: float = DEFAULT_G,
    n_quad: int = 256,
    phi: Callable[[np.ndarray], np.ndarray] | None = None,
    dphi: Callable[[np.ndarray], np.ndarray] | None = None,
) -> tuple[float, float]:
    """Residuals of the jump relations along the physical path.

    The path integral is evaluated with composite 5-point Gauss-Legendre on
    ``n_quad`` equal panels. ``phi`` (with derivative ``dphi``) reparametrizes
    the path; the default is the identity.
    """
    if n_quad < 16:
        raise ValueError("n_quad must be at least 16")
    if phi is None:
        phi = lambda s: s  # noqa: E731
        dphi = np.ones_like
    elif dphi is None:
        raise ValueError("dphi is required with a custom phi")

    th_m, th_p = terrain_minus.theta, terrain_plus.theta
    edges = np.linspace(0.0, 1.0, n_quad + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    s = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()

    ph = phi(s)
    h_s = minus.h + ph * (plus.h - minus.h)
    theta_s = th_m + th_m * ph / (th_m * ph + (1.0 - ph) * th_p) * (th_p - th_m)
    surface_slope = dphi(s) * ((terrain_plus.z - terrain_minus.z) + (plus.h - minus.h))
    integral = float(np.sum(w * theta_s * h_s * surface_slope))

    r_mass = th_p * plus.h * plus.u - th_m * minus.h * minus.u
    r_mom = th_p * plus.h * plus.u**2 - th_m * minus.h * minus.u**2 + g * integral
    return r_mass, r_mom


def momentum_scale(minus: HydraulicState, terrain_minus: TerrainSide, g: float = DEFAULT_G) -> float:
    """Reference magnitude for relative jump residuals."""
    return terrain_minus.theta * minus.h * minus.u**2 + 0.5 * g * minus.h**2


__all__ = [
    "TerrainJumpParams",
    "PathCoefficients",
    "RootCase",
    "RootClassification",
    "ThreeWaveResult",
    "path_coefficients",
    "psi_eval",
    "selection_energy",
    "psi_minimum",
    "froude_at_maximum",
    "critical_froude_numbers",
    "classify_and_solve",
    "tilde_fr",
    "solve_w3",
    "verify_generalized_rh",
    "momentum_scale",
]
