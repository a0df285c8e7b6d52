"""Wave curves of the two genuinely nonlinear families on flat terrain.

The 1-wave curve issues from a left state and lists every state that a
1-rarefaction (``h < h_L``) or 1-shock (``h > h_L``) can reach. The
2-backward curve ends at a right state and lists every left state that a
2-wave connects to it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DEFAULT_G, HydraulicState, check_height, froude_squared
from .errors import NonPositiveHeight, NotShockBranch, SupercriticalAnchor


class Family(str, enum.Enum):
    ONE = "Family1"
    TWO_BACKWARD = "Family2Backward"


@dataclass(frozen=True)
class CurveAnchor:
    anchor: HydraulicState
    family: Family
    g: float = DEFAULT_G


@dataclass(frozen=True)
class CurveRow:
    h: float
    u: float
    branch: str  # "rarefaction" or "shock"
    speed: float  # eigenvalue on the rarefaction branch, shock speed otherwise


def eval_w1(h: float, h_l: float, u_l: float, g: float = DEFAULT_G) -> float:
    """Velocity on the 1-wave curve issuing from ``(h_l, u_l)``."""
    check_height(h)
    return kernels.u_w1(h, h_l, u_l, g)


def eval_w2b(h: float, h_r: float, u_r: float, g: float = DEFAULT_G) -> float:
    """Velocity on the 2-backward curve reaching ``(h_r, u_r)``."""
    check_height(h)
    return kernels.u_w2b(h, h_r, u_r, g)


def shock_speed(family: Family, h: float, anchor: HydraulicState, g: float = DEFAULT_G) -> float:
    """Speed of the shock joining ``anchor`` to height ``h`` on its curve.

    Only defined on the shock branch ``h > anchor.h``.
    """
    if not h > anchor.h:
        raise NotShockBranch(f"h={h} is not above the anchor height {anchor.h}", "h")
    root = math.sqrt(g * h) * math.sqrt(0.5 * (1.0 + h / anchor.h))
    if family is Family.ONE:
        return anchor.u - root
    return anchor.u + root


def eigenvalue(family: Family | int, s: HydraulicState, g: float = DEFAULT_G) -> float:
    c = math.sqrt(g * s.h)
    if family in (Family.ONE, 1):
        return s.u - c
    return s.u + c


def sonic_point_on_w1(anchor: HydraulicState, g: float = DEFAULT_G) -> HydraulicState:
    """Point where the 1-rarefaction from a subcritical anchor reaches Fr = 1."""
    fr2 = froude_squared(anchor, g)
    if fr2 >= 1.0:
        raise SupercriticalAnchor(f"anchor Froude^2={fr2:.6g} is not subcritical", "anchor")
    fr = anchor.u / math.sqrt(g * anchor.h)
    h_sharp = anchor.h * (fr + 2.0) ** 2 / 9.0
    return HydraulicState(h_sharp, math.sqrt(g * h_sharp))


def emit_curve(
    anchor: HydraulicState,
    family: Family,
    h_range: tuple[float, float],
    n_points: int,
    g: float = DEFAULT_G,
    log_spacing: bool = False,
) -> list[CurveRow]:
    """Tabulate a wave curve on a monotone grid of heights."""
    lo, hi = h_range
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    if not (lo > 0.0 and hi > lo):
        raise NonPositiveHeight(f"h_range must be positive and increasing, got {h_range}", "h_range")
    hs = np.geomspace(lo, hi, n_points) if log_spacing else np.linspace(lo, hi, n_points)
    f = kernels.u_w1 if family is Family.ONE else kernels.u_w2b
    fam = 1 if family is Family.ONE else 2
    rows = []
    for h in hs:
        h = float(h)
        u = f(h, anchor.h, anchor.u, g)
        if h <= anchor.h:
            rows.append(CurveRow(h, u, "rarefaction", eigenvalue(fam, HydraulicState(h, u), g)))
        else:
            rows.append(CurveRow(h, u, "shock", shock_speed(family, h, anchor, g)))
    return rows
