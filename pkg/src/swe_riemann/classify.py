"""Dam-break classification over a terrain step.

For still water on both sides with the left free surface higher, the terrain
and ``h_L`` fix a case label; the right height ``h_R`` then decides which
structure (if any) solves the problem through one or two threshold heights.
Thresholds are computed from the composite curve of the left state:

* ``xi_I``   smallest ``h_R`` whose 2-backward curve touches the branch of
  the composite curve through ``h_L`` (Type I needs ``h_R >= xi_I``).
* ``xi_II``  ``h_R`` whose 2-backward curve passes through the sonic
  landing point (Type II needs ``h_R <= xi_II``).
* ``xi_III`` ``h_R`` whose 2-backward curve passes through the conjugate
  state of the supercritical landing point (Type III needs ``h_R <= xi_III``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import kernels
from .constructor import (
    DEFAULT_SAMPLES,
    _bisect_predicate,
    attempt_types,
    conjugate_height,
    principal_branch,
    type3_landing,
)
from .core import HydraulicState, RiemannProblem, TerrainSide, WaveStructure, validate_problem
from .errors import NeverSolvable, NotDamBreak, RiemannError, WrongRegime
from .wave_curves import sonic_point_on_w1


class DamBreakCase(str, enum.Enum):
    A = "a"
    B1 = "b1"
    B2 = "b2"
    C = "c"
    D1 = "d1"
    D2 = "d2"
    UNCLASSIFIED = "Unclassified"
    CONSTANT_TERRAIN = "ConstantTerrain"


# item numbering of the existence statement, per case and verdict
_ITEMS = {
    "two_threshold": {"TypeIII": 1, "NoSolution": 2, "TypeI": 3},
    "one_threshold": {"NoSolution": 1, "TypeI": 2},
    "sonic": {"TypeII": 1, "TypeI": 2},
}
_FAMILY = {
    DamBreakCase.A: "two_threshold",
    DamBreakCase.B1: "two_threshold",
    DamBreakCase.B2: "one_threshold",
    DamBreakCase.C: "one_threshold",
    DamBreakCase.D1: "one_threshold",
    DamBreakCase.D2: "sonic",
}


@dataclass(frozen=True)
class Classification:
    """Case label, thresholds and the verdict at the given ``h_R``.

    ``thresholds`` uses ``xi1 < xi2`` for cases a and b1 and ``xi``
    otherwise; ``all_thresholds`` keeps every threshold that could be
    computed. ``solvable`` is the structure found (``"NoSolution"`` when
    none).
    """

    case: DamBreakCase
    thresholds: dict[str, float]
    h_c: float | None
    solvable: str
    item: int | None
    h_sharp: float
    all_thresholds: dict[str, float] = field(default_factory=dict)

    @property
    def citation(self) -> str:
        if self.item is None:
            return f"Theorem case {self.case.value}"
        return f"Theorem case {self.case.value}, item {self.item}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case.value,
            "thresholds": self.thresholds,
            "h_c": self.h_c,
            "solvable": self.solvable,
            "item": self.item,
            "citation": self.citation,
            "h_sharp": self.h_sharp,
            "all_thresholds": self.all_thresholds,
        }


def is_dambreak(p: RiemannProblem) -> bool:
    return (
        p.left.u == 0.0
        and p.right.u == 0.0
        and p.left.h + p.terrain_left.z > p.right.h + p.terrain_right.z
    )


def _in_case_d(tl: TerrainSide, tr: TerrainSide) -> bool:
    dz = tr.z - tl.z
    return (tr.theta <= tl.theta and dz > 0.0) or (tr.theta < tl.theta and dz >= 0.0)


def find_h_c(left: HydraulicState, terrain_left: TerrainSide, terrain_right: TerrainSide,
             g: float, n_samples: int = DEFAULT_SAMPLES) -> float:
    """Lowest height of the 1-rarefaction whose terrain jump still has a root.

    Marches down from ``h_L`` to the sonic point; returns the sonic height
    when the jump is solvable all the way.
    """
    if not _in_case_d(terrain_left, terrain_right):
        raise WrongRegime("h_c is defined for a lower porosity on a raised bed only", "terrain_right")
    theta = terrain_right.theta / terrain_left.theta
    dz = terrain_right.z - terrain_left.z
    h_sharp = sonic_point_on_w1(left, g).h
    hs = np.linspace(left.h, h_sharp, n_samples)
    ok = kernels.composite_samples(hs, left.h, left.u, theta, dz, g)[0]
    if not ok[0]:
        raise NeverSolvable("terrain jump has no root even at the left state", "left")
    bad = np.nonzero(ok == 0)[0]
    if len(bad) == 0:
        return float(h_sharp)

    def good(h):
        return bool(kernels.three_wave(h, kernels.u_w1(h, left.h, left.u, g), theta, dz, g)[0])

    k = int(bad[0])
    h_good, _ = _bisect_predicate(good, float(hs[k - 1]), float(hs[k]))
    return h_good


def dambreak_case(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES) -> tuple[DamBreakCase, float | None]:
    """Case label from terrain and ``h_L`` alone, plus ``h_c`` in case d."""
    if p.constant_terrain:
        return DamBreakCase.CONSTANT_TERRAIN, None
    tl, tr, g = p.terrain_left, p.terrain_right, p.g
    th_l, th_r, dz = tl.theta, tr.theta, p.dz
    h_l = p.left.h
    h_sharp = sonic_point_on_w1(p.left, g).h
    if th_r > th_l and dz > 0.0:
        if h_l > dz and h_sharp > dz * th_r / (th_r - th_l):
            return DamBreakCase.A, None
        return DamBreakCase.UNCLASSIFIED, None
    if (th_r > th_l and dz <= 0.0) or (th_r >= th_l and dz < 0.0):
        ft = _tilde_fr_at(p.theta_ratio, dz / h_sharp)
        return (DamBreakCase.B1 if ft < 1.0 else DamBreakCase.B2), None
    if th_r < th_l and dz < 0.0:
        if h_l < dz * th_r / (th_r - th_l):
            return DamBreakCase.C, None
        return DamBreakCase.UNCLASSIFIED, None
    h_c = find_h_c(p.left, tl, tr, g, n_samples)
    theta = p.theta_ratio
    up = kernels.u_w1(h_c, h_l, p.left.u, g)
    fr2_plus = kernels.three_wave(h_c, up, theta, dz, g)[5]
    return (DamBreakCase.D1 if fr2_plus < 1.0 else DamBreakCase.D2), h_c


def _tilde_fr_at(theta: float, zn: float) -> float:
    c = 1.0 - zn
    _, b = kernels.path_coefficients(theta)
    return 1.0 / theta + (-b / (-b + theta)) * (c - 1.0 / theta)


def xi_through(point: HydraulicState, g: float) -> float:
    """Still-water right height whose 2-backward curve passes through ``point``."""

    def f(h_r):
        return kernels.u_w2b(point.h, h_r, 0.0, g) - point.u

    if point.u == 0.0:
        return point.h
    lo = hi = point.h
    if point.u > 0.0:
        while f(lo) <= 0.0:
            lo *= 0.5
    else:
        while f(hi) >= 0.0:
            hi *= 2.0
    return brentq(f, lo, hi, xtol=1e-15, rtol=1e-14, maxiter=500)


def compute_thresholds(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES) -> dict[str, float]:
    """Every threshold available for this left state and terrain."""
    g, left = p.g, p.left
    out: dict[str, float] = {}
    branch = principal_branch(left, p.terrain_left, p.terrain_right, g, n_samples=n_samples)
    if branch is not None:
        xis = np.array([xi_through(HydraulicState(h, u), g) for h, u in zip(branch.h_plus, branch.u_plus)])
        k = int(np.argmin(xis))
        xi_i = float(xis[k])
        if 0 < k < len(xis) - 1:
            theta, dz = p.theta_ratio, p.dz

            def xi_of(h):
                um = kernels.u_w1(h, left.h, left.u, g)
                ok, _, _, hp, up, _ = kernels.three_wave(h, um, theta, dz, g)
                return xi_through(HydraulicState(hp, up), g) if ok else math.inf

            res = minimize_scalar(
                xi_of, bounds=(float(branch.hs[k + 1]), float(branch.hs[k - 1])),
                method="bounded", options={"xatol": 1e-13},
            )
            xi_i = min(xi_i, float(res.fun))
        out["xi_I"] = xi_i
        if branch.end_kind == "sonic":
            out["xi_II"] = xi_through(branch.end_downstream, g)
    try:
        _, landing = type3_landing(p)
    except RiemannError:
        pass
    else:
        h0 = conjugate_height(landing, g)
        p0 = HydraulicState(h0, kernels.u_w1(h0, landing.h, landing.u, g))
        out["xi_III"] = xi_through(p0, g)
    return out


def _named_thresholds(case: DamBreakCase, allt: dict[str, float]) -> dict[str, float]:
    fam = _FAMILY.get(case)
    if fam == "two_threshold" and "xi_III" in allt and "xi_I" in allt:
        return {"xi1": allt["xi_III"], "xi2": allt["xi_I"]}
    if fam == "one_threshold" and "xi_I" in allt:
        return {"xi": allt["xi_I"]}
    if fam == "sonic" and "xi_II" in allt:
        return {"xi": allt["xi_II"]}
    return {}


def classify_dambreak(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES,
                      allow_any_porosity: bool = False) -> Classification:
    """Classify a dam-break problem and report which structure solves it."""
    validate_problem(p, allow_any_porosity=allow_any_porosity)
    if not is_dambreak(p):
        raise NotDamBreak("dam-break needs u_L = u_R = 0 and h_L + z_L > h_R + z_R")
    case, h_c = dambreak_case(p, n_samples)
    h_sharp = sonic_point_on_w1(p.left, p.g).h
    if case is DamBreakCase.CONSTANT_TERRAIN:
        return Classification(case, {}, None, "ConstantTerrain", None, h_sharp)
    allt = compute_thresholds(p, n_samples)
    result = attempt_types(p, n_samples=n_samples)
    verdict = result.type_label.value if isinstance(result, WaveStructure) else "NoSolution"
    item = _ITEMS.get(_FAMILY.get(case, ""), {}).get(verdict)
    return Classification(case, _named_thresholds(case, allt), h_c, verdict, item, h_sharp, allt)


__all__ = [
    "Classification",
    "DamBreakCase",
    "classify_dambreak",
    "compute_thresholds",
    "dambreak_case",
    "find_h_c",
    "is_dambreak",
    "xi_through",
]
