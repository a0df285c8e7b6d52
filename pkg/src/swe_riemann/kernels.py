"""Kernel backend selection.

The compiled extension is used when it imports cleanly; otherwise the
pure-Python module is loaded. Setting ``SWE_RIEMANN_PURE=1`` forces the
fallback (handy for benchmarks and for checking both paths agree).
"""

import os

if os.environ.get("SWE_RIEMANN_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
SERIES_RADIUS = _impl.SERIES_RADIUS
DOUBLE_ROOT_RTOL = _impl.DOUBLE_ROOT_RTOL
STILL_FR2 = _impl.STILL_FR2

path_coefficients = _impl.path_coefficients
cubic_coefficients = _impl.cubic_coefficients
psi = _impl.psi
stationary_point = _impl.stationary_point
positive_roots = _impl.positive_roots
selection_energy = _impl.selection_energy
select_root = _impl.select_root
u_w1 = _impl.u_w1
u_w2b = _impl.u_w2b
three_wave = _impl.three_wave
composite_samples = _impl.composite_samples

__all__ = [
    "BACKEND",
    "path_coefficients",
    "cubic_coefficients",
    "psi",
    "stationary_point",
    "positive_roots",
    "selection_energy",
    "select_root",
    "u_w1",
    "u_w2b",
    "three_wave",
    "composite_samples",
]
