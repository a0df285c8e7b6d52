import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swe_riemann import (
    HydraulicState,
    NoSolutionReport,
    RiemannProblem,
    StructureType,
    TerrainSide,
    WaveKind,
    WaveStructure,
    build_composite_curve,
    find_h_c,
    solve,
    solve_constant_terrain,
    solve_type1,
    solve_type2,
    solve_type3,
    solve_w3,
)
from swe_riemann.constructor import (
    conjugate_height,
    principal_branch,
    shock_residuals,
    structure_violations,
    type3_landing,
)
from swe_riemann.errors import (
    NegativeInterposedShockSpeed,
    NeverSolvable,
    NoSonicLanding,
    NoTerrainSolution,
    NoWetIntersection,
    SupercriticalData,
    WrongRegime,
)
from swe_riemann.wave_curves import sonic_point_on_w1

from .conftest import CASE_TERRAINS, FALLING_HALF, G, case_problem, dambreak


def u1(h, hl, ul, g=G):
    h = np.asarray(h, dtype=float)
    raref = ul + 2.0 * np.sqrt(g * hl) * (1.0 - np.sqrt(h / hl))
    shock = ul + np.sqrt(g * hl) * (1.0 - h / hl) * np.sqrt(0.5 * (1.0 + hl / h))
    return np.where(h <= hl, raref, shock)


def u2b(h, hr, ur, g=G):
    h = np.asarray(h, dtype=float)
    raref = ur - 2.0 * np.sqrt(g * hr) * (1.0 - np.sqrt(h / hr))
    shock = ur - np.sqrt(g * hr) * (1.0 - h / hr) * np.sqrt(0.5 * (1.0 + hr / h))
    return np.where(h <= hr, raref, shock)


def scan_bisect(f, lo, hi, step, largest=True, vectorized=False):
    """Grid scan with spacing ``step`` then bisection of a sign change."""
    xs = np.arange(lo, hi + 0.5 * step, step)
    v = f(xs) if vectorized else np.array([f(float(x)) for x in xs])
    idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) <= 0)[0]
    assert len(idx), "oracle found no sign change"
    i = idx[-1] if largest else idx[0]
    a, b = xs[i], xs[i + 1]
    fa = f(a)
    for _ in range(200):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if np.sign(fm) == np.sign(fa):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def assert_admissible(ws, p):
    assert structure_violations(ws, p.terrain_left, p.terrain_right, p.g) == []


# ---------------------------------------------------------------------------
# flat terrain


def test_dambreak_flat_matches_grid_oracle():
    p = dambreak(1.0, 0.1)
    ws = solve_constant_terrain(p)
    h_star = ws.diagnostics["h_star"]
    oracle = scan_bisect(lambda h: u1(h, 1.0, 0.0) - u2b(h, 0.1, 0.0), 1e-6, 1.0, 1e-6, vectorized=True)
    assert abs(h_star - oracle) <= 1e-8
    assert 0.1 < h_star < 1.0
    assert [w.kind for w in ws.waves] == [WaveKind.RAREFACTION1, WaveKind.SHOCK2]
    u_star = ws.states[1].u
    assert abs(ws.diagnostics["intersection_residual"]) <= 1e-10 * max(1.0, abs(u_star))
    r_m, r_p = shock_residuals(ws.waves[1], G)
    assert abs(r_m) <= 1e-9 and abs(r_p) <= 1e-9
    assert_admissible(ws, p)


def test_equal_states_give_empty_structure():
    p = dambreak(1.0, 1.0)
    ws = solve(p)
    assert ws.waves == () and ws.states == (p.left,)
    assert ws.type_label is StructureType.CONSTANT_TERRAIN


def test_symmetric_expansion():
    p = RiemannProblem(HydraulicState(1.0, -2.0), HydraulicState(1.0, 2.0))
    ws = solve_constant_terrain(p)
    star = ws.states[1]
    assert star.u == pytest.approx(0.0, abs=1e-12)
    assert star.h == pytest.approx((1.0 - 2.0 / (2.0 * math.sqrt(G))) ** 2, rel=1e-12)
    assert [w.kind for w in ws.waves] == [WaveKind.RAREFACTION1, WaveKind.RAREFACTION2]
    assert_admissible(ws, p)


def test_vacuum_is_reported():
    p = RiemannProblem(HydraulicState(1.0, -10.0), HydraulicState(1.0, 10.0))
    with pytest.raises(NoWetIntersection):
        solve_constant_terrain(p)


# ---------------------------------------------------------------------------
# composite curve


def test_composite_identity_terrain():
    left = HydraulicState(1.0, 0.0)
    curve = build_composite_curve(left, TerrainSide(0.7, 0.1), TerrainSide(0.7, 0.1), G, n_samples=64)
    assert len(curve.branches) == 1 and curve.gap is None
    for s in curve.samples:
        assert s.downstream == s.upstream


def _problem_terrain(key):
    p = case_problem(key)
    return p.left, p.terrain_left, p.terrain_right


def test_case_a_curve_has_two_branches_split_by_sonic_line():
    left, tl, tr = _problem_terrain("a")
    curve = build_composite_curve(left, tl, tr, G, n_samples=512)
    assert curve.gap is None
    assert len(curve.branches) == 2
    (a0, b0), (a1, b1) = curve.branches
    assert all(s.fr2_plus < 1.0 for s in curve.samples[a0:b0])
    assert all(s.fr2_plus > 1.0 for s in curve.samples[a1:b1])


def test_case_c_curve_is_one_subcritical_branch():
    left, tl, tr = _problem_terrain("c")
    curve = build_composite_curve(left, tl, tr, G, n_samples=512)
    assert len(curve.branches) == 1 and curve.gap is None
    assert all(s.fr2_plus < 1.0 for s in curve.samples)


def test_gap_iff_terrain_failure():
    left, tl, tr = _problem_terrain("d2")
    curve = build_composite_curve(left, tl, tr, G, n_samples=512)
    assert curve.gap is not None
    lo, hi = curve.gap
    for s in curve.samples:
        failed = True
        try:
            solve_w3(s.upstream, tl, tr, G)
            failed = False
        except NoTerrainSolution:
            pass
        assert failed == (s.downstream is None)
        assert failed == (lo <= s.h <= hi)


@pytest.mark.parametrize("key", sorted(CASE_TERRAINS))
def test_branches_are_continuous(key):
    left, tl, tr = _problem_terrain(key)
    curve = build_composite_curve(left, tl, tr, G, n_samples=1024)
    for a, b in curve.branches:
        pts = np.array([(s.downstream.h, s.downstream.u) for s in curve.samples[a:b]])
        if len(pts) < 4:
            continue
        steps = np.hypot(*np.diff(pts, axis=0).T)
        for i in range(1, len(steps) - 1):
            local = max(steps[i - 1], steps[i + 1])
            assert steps[i] <= 10.0 * local + 1e-12


# ---------------------------------------------------------------------------
# h_c


def _jump_ok(h, left, tl, tr):
    try:
        solve_w3(HydraulicState(h, float(u1(h, left.h, left.u))), tl, tr, G)
        return True
    except NoTerrainSolution:
        return False


def test_h_c_against_scan_oracle():
    left, tl, tr = HydraulicState(1.0, 0.0), TerrainSide(1.0, 0.0), TerrainSide(0.5, 0.2)
    h_c = find_h_c(left, tl, tr, G)
    h_sharp = sonic_point_on_w1(left, G).h
    assert h_sharp < h_c < left.h
    hs = np.arange(left.h, h_sharp, -1e-4)
    ok = [_jump_ok(h, left, tl, tr) for h in hs]
    k = ok.index(False)
    good, bad = hs[k - 1], hs[k]
    for _ in range(60):
        mid = 0.5 * (good + bad)
        if _jump_ok(mid, left, tl, tr):
            good = mid
        else:
            bad = mid
    assert abs(h_c - good) <= 1e-10 * left.h
    assert _jump_ok(h_c, left, tl, tr)


def test_h_c_tends_to_sonic_height_for_small_jumps():
    left = HydraulicState(1.0, 0.0)
    h_sharp = sonic_point_on_w1(left, G).h
    gaps = [find_h_c(left, TerrainSide(1.0, 0.0), TerrainSide(1.0 - e, e), G) - h_sharp for e in (1e-4, 1e-6, 1e-8)]
    # the fold detaches from the sonic point like sqrt(jump size)
    assert all(d > 0.0 for d in gaps)
    for big, small in zip(gaps, gaps[1:]):
        assert big / small == pytest.approx(10.0, rel=0.05)


def test_h_c_errors():
    left = HydraulicState(1.0, 0.0)
    with pytest.raises(WrongRegime):
        find_h_c(left, TerrainSide(0.5, 0.0), TerrainSide(1.0, 0.2), G)
    with pytest.raises(NeverSolvable):
        find_h_c(left, TerrainSide(1.0, 0.0), TerrainSide(0.5, 1.5), G)


# ---------------------------------------------------------------------------
# Type I / II / III


def test_type1_on_falling_half_terrain():
    p = case_problem(FALLING_HALF, h_r=0.6)
    ws = solve_type1(p)
    assert ws.type_label is StructureType.TYPE_I
    assert [w.kind for w in ws.waves] == [WaveKind.RAREFACTION1, WaveKind.TERRAIN_CONTACT, WaveKind.SHOCK2]
    assert abs(ws.diagnostics["intersection_residual"]) <= 1e-9
    assert_admissible(ws, p)

    def mismatch(h):
        r = solve_w3(HydraulicState(h, float(u1(h, 1.0, 0.0))), p.terrain_left, p.terrain_right, G)
        return r.plus_state.u - float(u2b(r.plus_state.h, p.right.h, 0.0))

    branch = principal_branch(p.left, p.terrain_left, p.terrain_right, G)
    oracle = scan_bisect(mismatch, branch.h_end, 1.0, 1e-4)
    assert ws.diagnostics["h_star"] == pytest.approx(oracle, abs=1e-9)


def test_type1_reduces_to_flat_solution():
    p = dambreak(1.0, 0.5, 0.6, 0.0, 0.6, 0.0)
    t1 = solve_type1(p)
    flat = solve_constant_terrain(p)
    assert t1.diagnostics["h_star"] == pytest.approx(flat.diagnostics["h_star"], abs=1e-10)
    contact = t1.waves[t1.contact_index]
    assert contact.upstream == contact.downstream


def test_type2_on_falling_half_terrain():
    p = case_problem(FALLING_HALF, h_r=0.05)
    ws = solve_type2(p)
    assert ws.type_label is StructureType.TYPE_II
    kinds = [w.kind for w in ws.waves]
    assert kinds[:3] == [WaveKind.RAREFACTION1, WaveKind.TERRAIN_CONTACT, WaveKind.RAREFACTION1]
    u2 = ws.waves[1].downstream
    assert abs(math.sqrt(u2.u**2 / (G * u2.h)) - 1.0) <= 1e-9
    h_star = ws.diagnostics["h_star"]
    assert h_star < u2.h
    oracle = scan_bisect(lambda h: u1(h, u2.h, u2.u) - u2b(h, p.right.h, 0.0), 1e-6, u2.h, 1e-5, vectorized=True)
    assert h_star == pytest.approx(oracle, abs=1e-9)
    assert_admissible(ws, p)


def test_type2_needs_sonic_landing():
    with pytest.raises(NoSonicLanding):
        solve_type2(case_problem("c", h_r=0.05))


def test_type3_rarefaction_and_shock_variants():
    p = case_problem("a")
    sharp, u2 = type3_landing(p)
    assert sharp == sonic_point_on_w1(p.left, G)
    for h_r, middle in ((0.01, WaveKind.RAREFACTION1), (0.1, WaveKind.SHOCK1)):
        q = p.with_right_height(h_r)
        ws = solve_type3(q)
        assert ws.type_label is StructureType.TYPE_III
        assert ws.waves[0].downstream.h == sharp.h
        assert ws.waves[2].kind is middle
        oracle = scan_bisect(lambda h: u1(h, u2.h, u2.u) - u2b(h, h_r, 0.0), 1e-5, 2.0, 1e-5, vectorized=True)
        assert ws.diagnostics["h_star"] == pytest.approx(oracle, abs=1e-9)
        assert_admissible(ws, q)


def test_type3_rejects_left_moving_interposed_shock():
    p = case_problem("a")
    _, u2 = type3_landing(p)
    assert conjugate_height(u2, G) > u2.h
    with pytest.raises(NegativeInterposedShockSpeed):
        solve_type3(p.with_right_height(0.2))


# ---------------------------------------------------------------------------
# dispatcher


def test_supercritical_data_rejected():
    p = RiemannProblem(HydraulicState(1.0, 5.0), HydraulicState(0.5, 0.0), TerrainSide(1.0, 0.0), TerrainSide(0.5, 0.1))
    with pytest.raises(SupercriticalData):
        solve(p)


def test_gap_returns_report_with_citation():
    r = solve(case_problem("a", h_r=0.2))
    assert isinstance(r, NoSolutionReport)
    assert set(r.reasons) == {"TypeI", "TypeII", "TypeIII"}
    assert r.classification.citation == "Theorem case a, item 2"


def test_falling_half_terrain_labels():
    assert solve(case_problem(FALLING_HALF, h_r=0.6)).type_label is StructureType.TYPE_I
    assert solve(case_problem(FALLING_HALF, h_r=0.05)).type_label is StructureType.TYPE_II
    assert solve(case_problem("a", h_r=0.05)).type_label is StructureType.TYPE_III
    assert solve(case_problem("a", h_r=0.79)).type_label is StructureType.TYPE_I


def test_reduction_to_flat():
    p = dambreak(1.0, 0.3, 0.8, 0.1, 0.8, 0.1)
    a, b = solve(p), solve_constant_terrain(p)
    for s, t in zip(a.states, b.states):
        assert s.h == pytest.approx(t.h, abs=1e-10) and s.u == pytest.approx(t.u, abs=1e-10)


def test_deterministic():
    p = case_problem("b1", h_r=0.9)
    assert solve(p).to_dict() == solve(p).to_dict()


@pytest.mark.parametrize("key", sorted(CASE_TERRAINS) + ["fall"])
@given(frac=st.floats(0.005, 0.995))
@settings(max_examples=15, deadline=None)
def test_every_structure_is_admissible(key, frac):
    terrain = FALLING_HALF if key == "fall" else CASE_TERRAINS[key]
    h_l, _, zl, _, zr = terrain
    p = case_problem(terrain, h_r=frac * (h_l + zl - zr))
    r = solve(p, n_samples=512)
    if isinstance(r, WaveStructure):
        assert_admissible(r, p)
        rt = WaveStructure.from_dict(r.to_dict())
        assert_admissible(rt, p)


def test_general_data_with_shock_on_the_left():
    # deeper right state: the intersection lies on the 1-shock side of h_L
    p = RiemannProblem(HydraulicState(0.5, 0.0), HydraulicState(1.0, 0.0), TerrainSide(1.0, 0.0), TerrainSide(0.95, 0.0))
    ws = solve(p)
    assert ws.type_label is StructureType.TYPE_I
    assert ws.waves[0].kind is WaveKind.SHOCK1
    assert_admissible(ws, p)
