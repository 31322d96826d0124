"""Pure-numpy implementations of the hot numeric kernels.

These are the fallback path selected by GIANT_SIM_NO_NUMBA=1 (or when numba
is not importable).  Signatures must stay in lockstep with _kernels_nb.py.
"""

import numpy as np

BACKEND = "numpy"


def lift_heights(c0, c1, c2, c3, c4, period, ts, out):
    """Quartic foot height over wrapped time, clamped at ground level."""
    x = np.mod(ts, period)
    np.copyto(out, c0 + x * (c1 + x * (c2 + x * (c3 + x * c4))))
    np.maximum(out, 0.0, out=out)
    return out


def foot_points(r, reach, gx, gy, thetas, out_x, out_y):
    """Crank-through-guide foot positions for an array of crank angles.

    Crank pin P = r*(cos t, sin t); the link runs from P through the guide
    pivot G and the foot sits `reach` along that direction from P.
    """
    px = r * np.cos(thetas)
    py = r * np.sin(thetas)
    dx = gx - px
    dy = gy - py
    d = np.hypot(dx, dy)
    np.copyto(out_x, px + reach * dx / d)
    np.copyto(out_y, py + reach * dy / d)
    return d.min()


def foot_derivs(r, reach, gx, gy, thetas, out_dx, out_dy):
    """d(foot)/d(theta) for an array of crank angles."""
    px = r * np.cos(thetas)
    py = r * np.sin(thetas)
    dpx = -r * np.sin(thetas)
    dpy = r * np.cos(thetas)
    dx = gx - px
    dy = gy - py
    d = np.hypot(dx, dy)
    dot = dx * dpx + dy * dpy
    np.copyto(out_dx, dpx - reach * dpx / d + reach * dx * dot / d**3)
    np.copyto(out_dy, dpy - reach * dpy / d + reach * dy * dot / d**3)
    return d.min()


def savgol_apply(values, center, head, tail, out):
    """Apply precomputed Savitzky-Golay weights.

    center: (w,) weights for interior points; head/tail: (h, w) matrices
    evaluating the first/last full-window fits at the edge offsets.
    """
    n = values.shape[0]
    w = center.shape[0]
    h = w // 2
    for i in range(h, n - h):
        out[i] = np.dot(values[i - h:i + h + 1], center)
    out[:h] = head @ values[:w]
    out[n - h:] = tail @ values[n - w:]
    return out
