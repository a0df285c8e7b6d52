"""Evaluation of a self-similar composite solution at ``(x, t)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import DEFAULT_G, HydraulicState, TerrainSide, WaveKind, WaveStructure


class PointSample(NamedTuple):
    h: float
    u: float
    z: float
    theta: float
    fr2: float


class ProfileRow(NamedTuple):
    x: float
    h: float
    u: float
    surface: float
    fr2: float


def _fan_state(kind: WaveKind, upstream: HydraulicState, xi: float, g: float) -> HydraulicState:
    """Closed-form state inside a centred rarefaction at ``xi = x/t``."""
    if kind is WaveKind.RAREFACTION1:
        r = upstream.u + 2.0 * math.sqrt(g * upstream.h)
        c = (r - xi) / 3.0
        u = (r + 2.0 * xi) / 3.0
    else:
        l = upstream.u - 2.0 * math.sqrt(g * upstream.h)
        c = (xi - l) / 3.0
        u = (2.0 * xi + l) / 3.0
    return HydraulicState(c * c / g, u)


def state_at(structure: WaveStructure, xi: float, g: float = DEFAULT_G) -> HydraulicState:
    """State at similarity coordinate ``xi``; right limits at shocks and at the contact."""
    for i, w in enumerate(structure.waves):
        lo, hi = w.speed_range
        if xi < lo:
            return structure.states[i]
        if w.kind.is_fan and xi < hi:
            return _fan_state(w.kind, w.upstream, xi, g)
    return structure.states[-1]


def sample_at(
    structure: WaveStructure,
    terrain: tuple[TerrainSide, TerrainSide],
    x: float,
    t: float,
    g: float = DEFAULT_G,
) -> PointSample:
    """``(h, u, z, theta, Fr^2)`` at position ``x`` and time ``t > 0``."""
    if not t > 0.0:
        raise ValueError(f"t must be positive, got {t}")
    s = state_at(structure, x / t, g)
    side = terrain[0] if x < 0.0 else terrain[1]
    return PointSample(s.h, s.u, side.z, side.theta, s.u * s.u / (g * s.h))


@dataclass(frozen=True)
class ProfileRequest:
    structure: WaveStructure
    terrain: tuple[TerrainSide, TerrainSide]
    t: float
    x_grid: Sequence[float]
    g: float = DEFAULT_G

    def __post_init__(self):
        if not self.t > 0.0:
            raise ValueError(f"t must be positive, got {self.t}")
        xs = np.asarray(self.x_grid, dtype=float)
        if xs.ndim != 1 or len(xs) == 0:
            raise ValueError("x_grid must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(xs)):
            raise ValueError("x_grid must be finite")
        if np.any(np.diff(xs) < 0.0):
            raise ValueError("x_grid must be sorted")


def profile(req: ProfileRequest) -> list[ProfileRow]:
    rows = []
    for x in req.x_grid:
        x = float(x)
        s = sample_at(req.structure, req.terrain, x, req.t, req.g)
        rows.append(ProfileRow(x, s.h, s.u, s.z + s.h, s.fr2))
    return rows


def uniform_grid(xmin: float, xmax: float, n: int) -> np.ndarray:
    if n < 2:
        raise ValueError("n must be at least 2")
    if not xmax > xmin:
        raise ValueError("xmax must exceed xmin")
    return np.linspace(xmin, xmax, n)


__all__ = [
    "PointSample",
    "ProfileRequest",
    "ProfileRow",
    "profile",
    "sample_at",
    "state_at",
    "uniform_grid",
]
