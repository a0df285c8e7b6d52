"""Composite-wave construction.

On flat terrain the solution is the classical two-wave fan. With a terrain
step the stationary jump at ``x = 0`` has to be threaded between the
1-waves (left of the step, speeds <= 0) and the 2-waves (right of the step,
speeds >= 0). The curve obtained by pushing every state of the 1-rarefaction
through the terrain jump is the composite curve; a solution is located by
intersecting it, or a 1-wave continued from one of its points, with the
2-backward curve through the right state. Three structures are tried in
order:

* Type I   -- 1-wave, terrain jump, 2-wave.
* Type II  -- as Type I, but the composite curve turns sonic first, so a
  1-rarefaction sits right of the step before the 2-wave.
* Type III -- the 1-rarefaction reaches the sonic state at ``x = 0``; the
  terrain jump lands supercritical and another 1-wave (rarefaction or
  non-negative-speed shock) follows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .core import (
    ElementaryWave,
    HydraulicState,
    RiemannProblem,
    StructureType,
    TerrainSide,
    WaveKind,
    WaveStructure,
    froude_squared,
    validate_problem,
)
from .errors import (
    NegativeInterposedShockSpeed,
    NoIntersection,
    NoSonicLanding,
    NoWetIntersection,
    RiemannError,
    SupercriticalData,
)
from .terrain_jump import momentum_scale, verify_generalized_rh
from .wave_curves import Family, eigenvalue, shock_speed, sonic_point_on_w1

DEFAULT_SAMPLES = 2048
# admissibility slack on wave-speed signs and ordering [m/s]
SPEED_TOL = 1e-9
# Fr^2 above 1 + SONIC_SLACK counts as supercritical (absorbs roundoff at h#)
SONIC_SLACK = 1e-12


# ---------------------------------------------------------------------------
# small numerical helpers


def _root(f, lo, hi):
    return brentq(f, lo, hi, xtol=1e-15, rtol=1e-14, maxiter=500)


def _bisect_predicate(pred, good, bad):
    """Shrink ``[good, bad]`` (either order) to adjacent floats around a flip."""
    for _ in range(200):
        mid = 0.5 * (good + bad)
        if mid == good or mid == bad:
            break
        if pred(mid):
            good = mid
        else:
            bad = mid
    return good, bad


def _sign_changes(values):
    """Indices ``i`` with a sign change (or exact zero) between i and i+1."""
    v = np.asarray(values)
    s = np.sign(v)
    return np.nonzero((s[:-1] * s[1:] <= 0) & np.isfinite(v[:-1]) & np.isfinite(v[1:]))[0]


def _one_wave(up: HydraulicState, down: HydraulicState, g: float) -> ElementaryWave | None:
    if down.h == up.h:
        return None
    if down.h < up.h:
        return ElementaryWave(
            WaveKind.RAREFACTION1, (eigenvalue(1, up, g), eigenvalue(1, down, g)), up, down
        )
    s = shock_speed(Family.ONE, down.h, up, g)
    return ElementaryWave(WaveKind.SHOCK1, (s, s), up, down)


def _two_wave(left: HydraulicState, right: HydraulicState, g: float) -> ElementaryWave | None:
    if left.h == right.h:
        return None
    if left.h < right.h:
        return ElementaryWave(
            WaveKind.RAREFACTION2, (eigenvalue(2, left, g), eigenvalue(2, right, g)), left, right
        )
    s = shock_speed(Family.TWO_BACKWARD, left.h, right, g)
    return ElementaryWave(WaveKind.SHOCK2, (s, s), left, right)


def _contact(minus: HydraulicState, plus: HydraulicState) -> ElementaryWave:
    return ElementaryWave(WaveKind.TERRAIN_CONTACT, (0.0, 0.0), minus, plus)


def _assemble(waves, left: HydraulicState, label: StructureType, diagnostics) -> WaveStructure:
    waves = tuple(w for w in waves if w is not None)
    states = [left] + [w.downstream for w in waves]
    return WaveStructure(waves, tuple(states), label, diagnostics)


def _check_sides(waves, label: str) -> None:
    """Waves left of the step must not outrun it, and vice versa."""
    seen_contact = False
    for w in waves:
        if w is None:
            continue
        if w.kind is WaveKind.TERRAIN_CONTACT:
            seen_contact = True
        elif not seen_contact and w.speed_range[1] > SPEED_TOL:
            raise NoIntersection(f"{label}: {w.kind.value} left of the step moves right")
        elif seen_contact and w.speed_range[0] < -SPEED_TOL:
            raise NoIntersection(f"{label}: {w.kind.value} right of the step moves left")


# ---------------------------------------------------------------------------
# flat terrain


def solve_constant_terrain(p: RiemannProblem) -> WaveStructure:
    """Classical two-wave solution on flat, uniform-porosity terrain."""
    g = p.g
    left, right = p.left, p.right
    if left == right:
        return WaveStructure((), (left,), StructureType.CONSTANT_TERRAIN, {"h_star": left.h})

    def f(h):
        return kernels.u_w1(h, left.h, left.u, g) - kernels.u_w2b(h, right.h, right.u, g)

    lo = 1e-14 * min(left.h, right.h)
    if f(lo) <= 0.0:
        raise NoWetIntersection("wave curves do not meet at positive height (dry bed forms)")
    hi = max(left.h, right.h)
    while f(hi) > 0.0:
        hi *= 2.0
    h_star = _root(f, lo, hi)
    u_star = kernels.u_w1(h_star, left.h, left.u, g)
    star = HydraulicState(h_star, u_star)
    waves = (_one_wave(left, star, g), _two_wave(star, right, g))
    diag = {"h_star": h_star, "intersection_residual": f(h_star)}
    return _assemble(waves, left, StructureType.CONSTANT_TERRAIN, diag)


# ---------------------------------------------------------------------------
# composite curve W3(W1(h))


@dataclass(frozen=True)
class CurveSample:
    h: float
    upstream: HydraulicState
    downstream: HydraulicState | None
    fr2_plus: float
    which: int  # selected root: 0 smaller, 1 larger, -1 none


@dataclass(frozen=True)
class CompositeCurve:
    """Samples of the composite curve, marching down from the start height.

    ``branches`` holds ``(start, stop)`` index ranges into ``samples``; each
    range shares the selected root and the side of Fr = 1. ``gaps`` lists
    height intervals (``(h_lo, h_hi)``) where the terrain jump has no root.
    """

    samples: tuple[CurveSample, ...]
    branches: tuple[tuple[int, int], ...]
    gaps: tuple[tuple[float, float], ...] = ()

    @property
    def gap(self) -> tuple[float, float] | None:
        if not self.gaps:
            return None
        return min(g[0] for g in self.gaps), max(g[1] for g in self.gaps)

    def branch_of(self, i: int) -> int | None:
        for k, (a, b) in enumerate(self.branches):
            if a <= i < b:
                return k
        return None


def _terrain_args(p: RiemannProblem):
    return p.theta_ratio, p.dz


def build_composite_curve(
    left: HydraulicState,
    terrain_left: TerrainSide,
    terrain_right: TerrainSide,
    g: float,
    h_lo: float | None = None,
    n_samples: int = DEFAULT_SAMPLES,
    h_hi: float | None = None,
) -> CompositeCurve:
    """Sample ``W3(W1(h))`` for ``h`` from ``h_hi`` (default ``h_L``) down to ``h_lo``.

    ``h_lo`` defaults to the sonic point of the 1-rarefaction.
    """
    if h_lo is None:
        h_lo = sonic_point_on_w1(left, g).h
    if h_hi is None:
        h_hi = left.h
    theta = terrain_right.theta / terrain_left.theta
    dz = terrain_right.z - terrain_left.z
    hs = np.linspace(h_hi, h_lo, n_samples)
    if terrain_left == terrain_right:
        um = np.array([kernels.u_w1(h, left.h, left.u, g) for h in hs])
        ok = np.ones(n_samples, dtype=np.int8)
        which = np.ones(n_samples, dtype=np.int8)
        hp, up = hs.copy(), um.copy()
        fp = um * um / (g * hs)
    else:
        ok, which, um, hp, up, fp = kernels.composite_samples(hs, left.h, left.u, theta, dz, g)

    samples = []
    for i in range(n_samples):
        upstream = HydraulicState(float(hs[i]), float(um[i]))
        if ok[i]:
            samples.append(
                CurveSample(upstream.h, upstream, HydraulicState(float(hp[i]), float(up[i])),
                            float(fp[i]), int(which[i]))
            )
        else:
            samples.append(CurveSample(upstream.h, upstream, None, math.nan, -1))

    branches, gaps = [], []
    start = None
    gap_start = None
    prev_sig = None
    for i, s in enumerate(samples):
        if s.downstream is None:
            if start is not None:
                branches.append((start, i))
                start = None
            if gap_start is None:
                gap_start = i
            prev_sig = None
            continue
        if gap_start is not None:
            gaps.append((samples[i - 1].h, samples[gap_start].h))
            gap_start = None
        sig = (s.which, s.fr2_plus > 1.0 + SONIC_SLACK)
        if start is None:
            start = i
        elif sig != prev_sig:
            branches.append((start, i))
            start = i
        prev_sig = sig
    if start is not None:
        branches.append((start, n_samples))
    if gap_start is not None:
        gaps.append((samples[-1].h, samples[gap_start].h))
    return CompositeCurve(tuple(samples), tuple(branches), tuple(gaps))


@dataclass(frozen=True)
class PrincipalBranch:
    """Connected piece of the composite curve that contains the start height.

    ``end_kind`` says why it stops: ``"floor"`` (reached ``h_lo``),
    ``"sonic"`` (downstream Froude number reaches 1), ``"switch"`` (the
    selection energy jumps to the other root) or ``"gap"`` (no root).
    """

    h_start: float
    h_end: float
    end_kind: str
    end_upstream: HydraulicState
    end_downstream: HydraulicState
    end_fr2_plus: float
    supercritical: bool
    which: int
    hs: np.ndarray = field(repr=False)
    h_plus: np.ndarray = field(repr=False)
    u_plus: np.ndarray = field(repr=False)


class _W3OnW1:
    """Memo-free evaluator of the composite curve at a single height."""

    def __init__(self, left: HydraulicState, theta: float, dz: float, g: float):
        self.left, self.theta, self.dz, self.g = left, theta, dz, g

    def __call__(self, h):
        u = kernels.u_w1(h, self.left.h, self.left.u, self.g)
        return (u,) + tuple(kernels.three_wave(h, u, self.theta, self.dz, self.g))


def principal_branch(
    left: HydraulicState,
    terrain_left: TerrainSide,
    terrain_right: TerrainSide,
    g: float,
    h_lo: float | None = None,
    n_samples: int = DEFAULT_SAMPLES,
) -> PrincipalBranch | None:
    """Locate the branch through ``h_L`` and pin its end to machine precision.

    Returns ``None`` when the terrain jump fails at ``h_L`` itself.
    """
    if h_lo is None:
        h_lo = sonic_point_on_w1(left, g).h
    theta = terrain_right.theta / terrain_left.theta
    dz = terrain_right.z - terrain_left.z
    if terrain_left == terrain_right:
        theta, dz = 1.0, 0.0
    w3 = _W3OnW1(left, theta, dz, g)
    hs = np.linspace(left.h, h_lo, n_samples)
    ok, which, um, hp, up, fp = kernels.composite_samples(hs, left.h, left.u, theta, dz, g)
    if not ok[0]:
        return None
    ref_which = int(which[0])
    ref_super = bool(fp[0] > 1.0 + SONIC_SLACK)

    def good(h):
        _, okh, _, w, _, _, f2 = w3(h)
        return bool(okh) and w == ref_which and (f2 > 1.0 + SONIC_SLACK) == ref_super

    flags = (ok == 1) & (which == ref_which) & ((fp > 1.0 + SONIC_SLACK) == ref_super)
    bad_idx = np.nonzero(~flags)[0]
    if len(bad_idx) == 0:
        k = n_samples
        h_end, kind = float(hs[-1]), "floor"
    else:
        k = int(bad_idx[0])
        h_end, h_bad = _bisect_predicate(good, float(hs[k - 1]), float(hs[k]))
        _, okb, _, wb, _, _, _ = w3(h_bad)
        if not okb:
            kind = "gap"
        elif wb != ref_which:
            kind = "switch"
        else:
            kind = "sonic"
    u_end, _, _, _, hp_end, up_end, f2_end = w3(h_end)
    branch_h = np.append(hs[:k], h_end) if h_end != hs[k - 1] else hs[:k].copy()
    branch_hp = np.append(hp[:k], hp_end) if h_end != hs[k - 1] else hp[:k].copy()
    branch_up = np.append(up[:k], up_end) if h_end != hs[k - 1] else up[:k].copy()
    return PrincipalBranch(
        float(left.h),
        h_end,
        kind,
        HydraulicState(h_end, u_end),
        HydraulicState(hp_end, up_end),
        f2_end,
        ref_super,
        ref_which,
        branch_h,
        branch_hp,
        branch_up,
    )


# ---------------------------------------------------------------------------
# the three constructive algorithms


def _require_jump_inputs(p: RiemannProblem) -> None:
    fl = froude_squared(p.left, p.g)
    fr = froude_squared(p.right, p.g)
    if fl >= 1.0 or fr >= 1.0:
        raise SupercriticalData(
            f"composite-wave algorithms need subcritical data (Fr_L^2={fl:.4g}, Fr_R^2={fr:.4g})",
            "left.u" if fl >= 1.0 else "right.u",
        )


def _jump_diagnostics(minus, plus, p: RiemannProblem) -> dict[str, float]:
    r_mass, r_mom = verify_generalized_rh(minus, plus, p.terrain_left, p.terrain_right, p.g)
    scale = momentum_scale(minus, p.terrain_left, p.g)
    return {"jump_mass_residual": r_mass / scale, "jump_momentum_residual": r_mom / scale}


def solve_type1(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES) -> WaveStructure:
    """1-wave, terrain jump, 2-wave.

    The intersection with the 2-backward curve is searched on the branch of
    the composite curve through ``h_L``; when several exist, the one with the
    largest ``h`` is used and the count is recorded in the diagnostics.
    """
    g, left, right = p.g, p.left, p.right
    branch = principal_branch(left, p.terrain_left, p.terrain_right, g, n_samples=n_samples)
    if branch is None:
        raise NoIntersection("Type I: terrain jump has no solution at the left state")
    theta, dz = _terrain_args(p)
    if p.constant_terrain:
        theta, dz = 1.0, 0.0
    w3 = _W3OnW1(left, theta, dz, g)

    def mismatch(h):
        _, ok, _, _, hp, up, _ = w3(h)
        if not ok:
            return math.nan
        return up - kernels.u_w2b(hp, right.h, right.u, g)

    d = np.array([u - kernels.u_w2b(h, right.h, right.u, g) for h, u in zip(branch.h_plus, branch.u_plus)])
    changes = _sign_changes(d)
    n_cross = len(changes)
    h_star = None
    if n_cross:
        i = int(changes[0])
        h_star = float(branch.hs[i]) if d[i] == 0.0 else _root(mismatch, float(branch.hs[i + 1]), float(branch.hs[i]))
    elif d[0] > 0.0:
        # right state sits above the whole rarefaction side: try the 1-shock side
        lo = left.h
        hi = 2.0 * lo
        for _ in range(60):
            _, ok, _, w, _, _, f2 = w3(hi)
            if not ok or w != branch.which or (f2 > 1.0 + SONIC_SLACK) != branch.supercritical:
                break
            f_hi = mismatch(hi)
            if f_hi <= 0.0:
                h_star = _root(mismatch, lo, hi)
                n_cross = 1
                break
            lo = hi
            hi *= 2.0
    if h_star is None:
        raise NoIntersection("Type I: 2-backward curve misses the composite-curve branch through h_L")

    u_minus, _, beta, _, hp, up, f2 = w3(h_star)
    minus = HydraulicState(h_star, u_minus)
    plus = HydraulicState(hp, up)
    waves = (_one_wave(left, minus, g), _contact(minus, plus), _two_wave(plus, right, g))
    _check_sides(waves, "Type I")
    diag = {
        "h_star": h_star,
        "intersection_residual": up - kernels.u_w2b(hp, right.h, right.u, g),
        "intersections_found": n_cross,
        "fr2_plus": f2,
        "branch_end": branch.end_kind,
        **_jump_diagnostics(minus, plus, p),
    }
    return _assemble(waves, left, StructureType.TYPE_I, diag)


def _w1_meets_w2b(anchor: HydraulicState, right: HydraulicState, g: float):
    """Height where the 1-curve from ``anchor`` meets the 2-backward curve of ``right``."""

    def f(h):
        return kernels.u_w1(h, anchor.h, anchor.u, g) - kernels.u_w2b(h, right.h, right.u, g)

    lo = 1e-14 * min(anchor.h, right.h)
    if f(lo) <= 0.0:
        raise NoWetIntersection("1-wave and 2-backward curves do not meet at positive height")
    hi = max(anchor.h, right.h)
    while f(hi) > 0.0:
        hi *= 2.0
    h = _root(f, lo, hi)
    return h, f(h)


def solve_type2(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES) -> WaveStructure:
    """1-wave, terrain jump landing on Fr = 1, 1-rarefaction, 2-wave."""
    g, left, right = p.g, p.left, p.right
    branch = principal_branch(left, p.terrain_left, p.terrain_right, g, n_samples=n_samples)
    if branch is None or branch.end_kind != "sonic":
        raise NoSonicLanding("Type II: composite curve through h_L never reaches Fr = 1")
    sonic = branch.end_downstream
    if sonic.u - kernels.u_w2b(sonic.h, right.h, right.u, g) > 0.0:
        raise NoIntersection("Type II: sonic landing point lies above the 2-backward curve")
    h_star, resid = _w1_meets_w2b(sonic, right, g)
    if h_star > sonic.h:
        raise NoIntersection("Type II: continuing 1-wave would be a left-moving shock")
    star = HydraulicState(h_star, kernels.u_w1(h_star, sonic.h, sonic.u, g))
    minus = branch.end_upstream
    waves = (
        _one_wave(left, minus, g),
        _contact(minus, sonic),
        _one_wave(sonic, star, g),
        _two_wave(star, right, g),
    )
    _check_sides(waves, "Type II")
    diag = {
        "h_sonic_upstream": minus.h,
        "sonic_froude_residual": math.sqrt(froude_squared(sonic, g)) - 1.0,
        "h_star": h_star,
        "intersection_residual": resid,
        **_jump_diagnostics(minus, sonic, p),
    }
    return _assemble(waves, left, StructureType.TYPE_II, diag)


def conjugate_height(s: HydraulicState, g: float) -> float:
    """Height reached by a stationary 1-shock from supercritical state ``s``."""
    fr2 = froude_squared(s, g)
    return 0.5 * s.h * (math.sqrt(1.0 + 8.0 * fr2) - 1.0)


def type3_landing(p: RiemannProblem) -> tuple[HydraulicState, HydraulicState]:
    """Sonic point of the left rarefaction and its image across the step.

    Raises :class:`NoIntersection` when that image does not exist or is not
    supercritical.
    """
    sharp = sonic_point_on_w1(p.left, p.g)
    theta, dz = _terrain_args(p)
    if p.constant_terrain:
        theta, dz = 1.0, 0.0
    ok, _, _, hp, up, f2 = kernels.three_wave(sharp.h, sharp.u, theta, dz, p.g)
    if not ok:
        raise NoIntersection("Type III: terrain jump has no solution at the sonic point")
    if not f2 > 1.0:
        raise NoIntersection("Type III: terrain jump from the sonic point lands subcritical")
    return sharp, HydraulicState(hp, up)


def solve_type3(p: RiemannProblem) -> WaveStructure:
    """1-rarefaction to the sonic point, terrain jump, 1-wave, 2-wave."""
    g, left, right = p.g, p.left, p.right
    sharp, u2 = type3_landing(p)
    h3, resid = _w1_meets_w2b(u2, right, g)
    if h3 > u2.h:
        s = shock_speed(Family.ONE, h3, u2, g)
        if s < 0.0:
            raise NegativeInterposedShockSpeed(f"Type III: interposed 1-shock moves left (speed {s:.6g})")
    u3 = HydraulicState(h3, kernels.u_w1(h3, u2.h, u2.u, g))
    waves = (
        _one_wave(left, sharp, g),
        _contact(sharp, u2),
        _one_wave(u2, u3, g),
        _two_wave(u3, right, g),
    )
    _check_sides(waves, "Type III")
    diag = {
        "h_sonic_upstream": sharp.h,
        "h_star": h3,
        "intersection_residual": resid,
        "fr2_landing": froude_squared(u2, g),
        **_jump_diagnostics(sharp, u2, p),
    }
    return _assemble(waves, left, StructureType.TYPE_III, diag)


# ---------------------------------------------------------------------------
# verification


def shock_residuals(w: ElementaryWave, g: float) -> tuple[float, float]:
    """Relative mass and momentum jump residuals of a moving shock."""
    a, b = w.upstream, w.downstream
    s = w.speed_range[0]
    q_a, q_b = a.h * a.u, b.h * b.u
    f_a = a.h * a.u**2 + 0.5 * g * a.h**2
    f_b = b.h * b.u**2 + 0.5 * g * b.h**2
    scale_m = max(abs(q_a), abs(q_b), abs(s) * max(a.h, b.h), 1e-300)
    scale_p = max(abs(f_a), abs(f_b), abs(s) * max(abs(q_a), abs(q_b)), 1e-300)
    return (s * (b.h - a.h) - (q_b - q_a)) / scale_m, (s * (q_b - q_a) - (f_b - f_a)) / scale_p


def structure_violations(
    ws: WaveStructure,
    terrain_left: TerrainSide,
    terrain_right: TerrainSide,
    g: float,
    shock_tol: float = 1e-9,
    jump_tol: float = 1e-8,
) -> list[str]:
    """Every broken invariant of a wave structure; empty when it is admissible."""
    out = []
    if len(ws.states) != len(ws.waves) + 1:
        out.append("state count does not match wave count")
        return out
    prev_hi = -math.inf
    seen_contact = False
    has_contact = ws.contact_index is not None
    for i, w in enumerate(ws.waves):
        if w.upstream != ws.states[i] or w.downstream != ws.states[i + 1]:
            out.append(f"wave {i}: end states do not match the state list")
        lo, hi = w.speed_range
        if lo > hi + SPEED_TOL or lo < prev_hi - SPEED_TOL:
            out.append(f"wave {i}: speeds out of order")
        prev_hi = hi
        if w.kind is WaveKind.TERRAIN_CONTACT:
            seen_contact = True
            r_mass, r_mom = verify_generalized_rh(w.upstream, w.downstream, terrain_left, terrain_right, g)
            scale = momentum_scale(w.upstream, terrain_left, g)
            if abs(r_mass) > jump_tol * scale or abs(r_mom) > jump_tol * scale:
                out.append(f"wave {i}: terrain jump residuals {r_mass:.3g}, {r_mom:.3g}")
            continue
        if has_contact and not seen_contact and hi > SPEED_TOL:
            out.append(f"wave {i}: moves right although left of the step")
        if has_contact and seen_contact and lo < -SPEED_TOL:
            out.append(f"wave {i}: moves left although right of the step")
        if w.kind.is_fan:
            fam = w.kind.family
            if abs(lo - eigenvalue(fam, w.upstream, g)) > SPEED_TOL or abs(hi - eigenvalue(fam, w.downstream, g)) > SPEED_TOL:
                out.append(f"wave {i}: fan edges are not characteristic speeds")
            sign = 1.0 if fam == 1 else -1.0
            inv_a = w.upstream.u + sign * 2.0 * math.sqrt(g * w.upstream.h)
            inv_b = w.downstream.u + sign * 2.0 * math.sqrt(g * w.downstream.h)
            if abs(inv_a - inv_b) > 1e-9 * max(1.0, abs(inv_a)):
                out.append(f"wave {i}: Riemann invariant not constant across the fan")
        else:
            r_m, r_p = shock_residuals(w, g)
            if abs(r_m) > shock_tol or abs(r_p) > shock_tol:
                out.append(f"wave {i}: shock residuals {r_m:.3g}, {r_p:.3g}")
    return out


# ---------------------------------------------------------------------------
# dispatch


@dataclass
class NoSolutionReport:
    """Why no composite wave was found.

    ``reasons`` maps each attempted structure to its failure message.
    """

    reasons: dict[str, str]
    classification: Any = None
    gap: tuple[float, float] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"solved": False, "reasons": self.reasons, "gap": self.gap}
        if self.classification is not None:
            out["classification"] = self.classification.to_dict()
        return out


def attempt_types(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES) -> WaveStructure | dict[str, str]:
    """Try Type I, II and III in turn; return the first structure or the failure reasons."""
    reasons = {}
    for label, fn in (("TypeI", solve_type1), ("TypeII", solve_type2), ("TypeIII", solve_type3)):
        try:
            if fn is solve_type3:
                return fn(p)
            return fn(p, n_samples=n_samples)
        except RiemannError as exc:
            reasons[label] = f"{type(exc).__name__}: {exc}"
    return reasons


def solve(p: RiemannProblem, n_samples: int = DEFAULT_SAMPLES, allow_any_porosity: bool = False):
    """Solve a Riemann problem; returns a :class:`WaveStructure` or a :class:`NoSolutionReport`."""
    validate_problem(p, allow_any_porosity=allow_any_porosity)
    if p.constant_terrain:
        return solve_constant_terrain(p)
    _require_jump_inputs(p)
    result = attempt_types(p, n_samples=n_samples)
    if isinstance(result, WaveStructure):
        return result
    from .classify import classify_dambreak, is_dambreak

    report = NoSolutionReport(result)
    if is_dambreak(p):
        report.classification = classify_dambreak(p, n_samples=n_samples)
    try:
        curve = build_composite_curve(p.left, p.terrain_left, p.terrain_right, p.g, n_samples=256)
        report.gap = curve.gap
    except RiemannError:
        pass
    return report


__all__ = [
    "CompositeCurve",
    "CurveSample",
    "NoSolutionReport",
    "PrincipalBranch",
    "attempt_types",
    "build_composite_curve",
    "conjugate_height",
    "principal_branch",
    "shock_residuals",
    "solve",
    "solve_constant_terrain",
    "solve_type1",
    "solve_type2",
    "solve_type3",
    "structure_violations",
    "type3_landing",
]
