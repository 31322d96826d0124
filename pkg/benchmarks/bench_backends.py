"""Compare the numba kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_backends.py
"""

import time

import numpy as np

from giantsim import _kernels_np
from giantsim.gait import GaitConfig
from giantsim.linkage import DEFAULT_GEOMETRY
from giantsim.profile import LiftProfile

try:
    from giantsim import _kernels_nb
except ImportError:
    _kernels_nb = None
    print("numba unavailable; only the numpy path will run")

N = 2_000_000
REPEATS = 5


def bench(label, fn, *args):
    fn(*args)  # warmup (JIT compile on the numba path)
    best = min(timed(fn, *args) for _ in range(REPEATS))
    print(f"  {label:<14} {best * 1e3:8.2f} ms")
    return best


def timed(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def main():
    profile = LiftProfile()
    geom = DEFAULT_GEOMETRY
    rng = np.random.default_rng(0)

    ts = rng.uniform(0.0, 10 * profile.period, N)
    thetas = rng.uniform(0.0, 2 * np.pi, N)
    out = np.empty(N)
    out2 = np.empty(N)

    values = rng.normal(size=200_000)
    window, polyorder = 21, 3
    half = window // 2
    offsets = np.arange(window, dtype=float) - half
    pinv = np.linalg.pinv(offsets[:, None] ** np.arange(polyorder + 1))
    center = np.ascontiguousarray((0.0 ** np.arange(polyorder + 1)) @ pinv)
    head = np.ascontiguousarray((offsets[:half, None] ** np.arange(polyorder + 1)) @ pinv)
    tail = np.ascontiguousarray((offsets[half + 1:, None] ** np.arange(polyorder + 1)) @ pinv)
    sg_out = np.empty_like(values)

    c = profile.coefficients
    gx, gy = geom.guide_pivot
    backends = [("numpy", _kernels_np)]
    if _kernels_nb is not None:
        backends.append(("numba", _kernels_nb))

    results = {}
    for name, impl in backends:
        print(f"{name}:")
        results[name, "lift"] = bench(
            "lift_heights", impl.lift_heights, *c, profile.period, ts, out)
        results[name, "points"] = bench(
            "foot_points", impl.foot_points, geom.crank_radius, geom.reach,
            gx, gy, thetas, out, out2)
        results[name, "derivs"] = bench(
            "foot_derivs", impl.foot_derivs, geom.crank_radius, geom.reach,
            gx, gy, thetas, out, out2)
        results[name, "savgol"] = bench(
            "savgol_apply", impl.savgol_apply, values, center, head, tail, sg_out)

    if _kernels_nb is not None:
        print("speedups (numpy time / numba time):")
        for key in ("lift", "points", "derivs", "savgol"):
            ratio = results["numpy", key] / results["numba", key]
            print(f"  {key:<14} {ratio:6.2f}x")


if __name__ == "__main__":
    main()
