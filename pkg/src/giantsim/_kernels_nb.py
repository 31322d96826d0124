"""Numba-compiled twins of the kernels in _kernels_np.py.

Importing this module requires numba; the facade in _kernels.py falls back
to the numpy path when the import fails or GIANT_SIM_NO_NUMBA is set.
fastmath stays off so both backends produce IEEE-identical arithmetic where
the operation order matches.
"""

import math

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def lift_heights(c0, c1, c2, c3, c4, period, ts, out):
    for i in range(ts.shape[0]):
        x = ts[i] % period
        y = c0 + x * (c1 + x * (c2 + x * (c3 + x * c4)))
        out[i] = y if y > 0.0 else 0.0
    return out


@njit(cache=True)
def foot_points(r, reach, gx, gy, thetas, out_x, out_y):
    d_min = 1e300
    for i in range(thetas.shape[0]):
        px = r * math.cos(thetas[i])
        py = r * math.sin(thetas[i])
        dx = gx - px
        dy = gy - py
        d = math.hypot(dx, dy)
        if d < d_min:
            d_min = d
        out_x[i] = px + reach * dx / d
        out_y[i] = py + reach * dy / d
    return d_min


@njit(cache=True)
def foot_derivs(r, reach, gx, gy, thetas, out_dx, out_dy):
    d_min = 1e300
    for i in range(thetas.shape[0]):
        px = r * math.cos(thetas[i])
        py = r * math.sin(thetas[i])
        dpx = -r * math.sin(thetas[i])
        dpy = r * math.cos(thetas[i])
        dx = gx - px
        dy = gy - py
        d = math.hypot(dx, dy)
        if d < d_min:
            d_min = d
        dot = dx * dpx + dy * dpy
        out_dx[i] = dpx - reach * dpx / d + reach * dx * dot / d**3
        out_dy[i] = dpy - reach * dpy / d + reach * dy * dot / d**3
    return d_min


@njit(cache=True)
def savgol_apply(values, center, head, tail, out):
    n = values.shape[0]
    w = center.shape[0]
    h = w // 2
    for i in range(h, n - h):
        acc = 0.0
        for j in range(w):
            acc += values[i - h + j] * center[j]
        out[i] = acc
    for i in range(h):
        acc_h = 0.0
        acc_t = 0.0
        for j in range(w):
            acc_h += head[i, j] * values[j]
            acc_t += tail[i, j] * values[n - w + j]
        out[i] = acc_h
        out[n - h + i] = acc_t
    return out
