import importlib

import pytest

from swe_riemann import HydraulicState, RiemannProblem, TerrainSide

G = 9.81


def _backends():
    mods = [importlib.import_module("swe_riemann._kernels_py")]
    try:
        mods.append(importlib.import_module("swe_riemann._kernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def kern(request):
    return request.param


def dambreak(h_l, h_r, theta_l=1.0, z_l=0.0, theta_r=1.0, z_r=0.0, g=G):
    return RiemannProblem(
        HydraulicState(h_l, 0.0),
        HydraulicState(h_r, 0.0),
        TerrainSide(theta_l, z_l),
        TerrainSide(theta_r, z_r),
        g,
    )


# Desk-scale dam-break instances, one per case label (h_L, theta_L, z_L, theta_R, z_R).
CASE_TERRAINS = {
    "a": (1.0, 0.5, 0.0, 1.0, 0.2),
    "b1": (1.0, 0.5, 0.0, 1.0, -0.2),
    "b2": (1.0, 1.0 / 1.2, 0.0, 1.0, -1.0),
    "c": (0.15, 1.0, 0.0, 0.5, -0.2),
    "d2": (1.0, 1.0, 0.0, 0.5, 0.2),
}
# Falling bed with halved porosity downstream.
FALLING_HALF = (1.0, 1.0, 0.0, 0.5, -0.2)


def case_problem(key, h_r=None):
    h_l, tl, zl, tr, zr = CASE_TERRAINS[key] if isinstance(key, str) else key
    if h_r is None:
        h_r = 0.5 * (h_l + zl - zr)
    return dambreak(h_l, h_r, tl, zl, tr, zr)


# ---------------------------------------------------------------------------
# acceptance report: one line per criterion in the terminal summary

_ACCEPTANCE: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    ac_id, title = mark.args
    entry = _ACCEPTANCE.setdefault(ac_id, {"title": title, "passed": [], "failed": []})
    if rep.passed and not hasattr(rep, "wasxfail"):
        entry["passed"].append(item.name)
    elif hasattr(rep, "wasxfail"):
        entry["failed"].append(f"{item.name} (expected failure: {rep.wasxfail})")
    else:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for ac_id in sorted(_ACCEPTANCE, key=lambda k: int(k[2:])):
        e = _ACCEPTANCE[ac_id]
        verdict = "FAIL" if e["failed"] else "PASS"
        line = f"{ac_id} {verdict}  {e['title']}"
        if e["failed"]:
            line += "  [" + "; ".join(e["failed"]) + "]"
        terminalreporter.write_line(line)
