"""Backend facade for the hot numeric kernels.

Set GIANT_SIM_NO_NUMBA=1 to force the pure-numpy path; otherwise numba is
used when importable.  benchmarks/bench_backends.py times both.
"""

import os

if os.environ.get("GIANT_SIM_NO_NUMBA", "").strip() not in ("", "0"):
    from . import _kernels_np as _impl
else:
    try:
        from . import _kernels_nb as _impl
    except ImportError:
        from . import _kernels_np as _impl

BACKEND = _impl.BACKEND
lift_heights = _impl.lift_heights
foot_points = _impl.foot_points
foot_derivs = _impl.foot_derivs
savgol_apply = _impl.savgol_apply
