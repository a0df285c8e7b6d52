"""Compare the compiled kernels with the pure-Python fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n 20000]

Both backends are imported directly, so the comparison does not depend on
``SWE_RIEMANN_PURE``. Reports the best wall time of ``--repeat`` runs for
each workload and the speedup of the compiled backend.
"""

from __future__ import annotations

import argparse
import importlib
import timeit

import numpy as np

G = 9.81


def _backends():
    out = {"python": importlib.import_module("swe_riemann._kernels_py")}
    try:
        out["cython"] = importlib.import_module("swe_riemann._kernels")
    except ImportError:
        pass
    return out


def _workloads(n: int):
    rng = np.random.default_rng(0)
    thetas = np.exp(rng.uniform(np.log(0.2), np.log(5.0), n)).tolist()
    zns = rng.uniform(-0.5, 0.5, n).tolist()
    fr2s = rng.uniform(0.0, 2.0, n).tolist()
    hs = np.linspace(1.0, 4.0 / 9.0, n)

    def select_roots(k):
        for t, z, f in zip(thetas, zns, fr2s):
            k.select_root(t, z, f)

    def composite(k):
        k.composite_samples(hs, 1.0, 0.0, 0.5, 0.2, G)

    def wave_curves(k):
        for h in hs:
            k.u_w1(h, 1.0, 0.0, G)
            k.u_w2b(h, 0.1, 0.0, G)

    return {"select_root": select_roots, "composite_samples": composite, "wave_curves": wave_curves}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=20000, help="calls per workload")
    args = ap.parse_args()

    backends = _backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the pure-Python backend only")
    print(f"{'workload':<20}" + "".join(f"{name:>14}" for name in backends) + f"{'speedup':>10}")
    for name, fn in _workloads(args.n).items():
        times = {b: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for b, k in backends.items()}
        cols = "".join(f"{times[b] * 1e3:>12.2f}ms" for b in backends)
        speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else f"{'n/a':>10}"
        print(f"{name:<20}{cols}{speed}")


if __name__ == "__main__":
    main()
