"""Trajectory-analysis toolkit: sliding-window smoothing and polynomial fits.

These are the operations used to reduce motion-capture samples of the foot
path into the lift polynomial: Savitzky-Golay smoothing plus plain
least-squares polynomial fitting, with a CSV exporter for the results.
"""

import csv
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

_SPACING_TOLERANCE = 1e-6  # relative
_CONDITION_LIMIT = 1e12


class BadWindowError(ValueError):
    """Window is even, too small for the polynomial order, or longer than the data."""


class NonUniformSpacingError(ValueError):
    """Sample spacing deviates by more than 1e-6 relative."""


class RankDeficientError(ValueError):
    """Design matrix is numerically singular."""


def _split_samples(samples: Iterable[Sequence[float]]) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(list(samples), dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("samples must be (t, value) pairs")
    return arr[:, 0], arr[:, 1]


def savitzky_golay(samples, window: int, polyorder: int) -> np.ndarray:
    """Sliding least-squares polynomial smoothing.

    Interior points get the centered-window fit evaluated at the centre;
    the first and last half-windows get the first/last full window's fit
    evaluated at their own offsets (no padding, no truncation).

    Returns an (n, 2) array of (t, smoothed value).
    """
    ts, values = _split_samples(samples)
    n = len(values)
    if window % 2 == 0 or window <= polyorder or window > n:
        raise BadWindowError(
            f"window {window} invalid for polyorder {polyorder} and {n} samples"
        )
    steps = np.diff(ts)
    mean_step = steps.mean()
    if mean_step == 0 or np.any(np.abs(steps / mean_step - 1.0) > _SPACING_TOLERANCE):
        raise NonUniformSpacingError("samples must be uniformly spaced in t")

    half = window // 2
    offsets = np.arange(window, dtype=np.float64) - half
    design = offsets[:, None] ** np.arange(polyorder + 1)  # (w, p+1)
    # Weights that evaluate the window's least-squares fit at a given offset:
    # row(offset) = offset_powers @ pinv(design).
    pinv = np.linalg.pinv(design)
    center = (0.0 ** np.arange(polyorder + 1)) @ pinv
    head = (offsets[:half, None] ** np.arange(polyorder + 1)) @ pinv
    tail = (offsets[half + 1:, None] ** np.arange(polyorder + 1)) @ pinv

    out = np.empty(n, dtype=np.float64)
    _kernels.savgol_apply(values, np.ascontiguousarray(center),
                          np.ascontiguousarray(head), np.ascontiguousarray(tail), out)
    return np.column_stack([ts, out])


def fit_polynomial(samples, degree: int) -> np.ndarray:
    """Least-squares polynomial fit; coefficients ascending (c0..c_degree)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    ts, values = _split_samples(samples)
    if len(ts) <= degree:
        raise ValueError("need more samples than the polynomial degree")
    design = ts[:, None] ** np.arange(degree + 1)
    if np.linalg.cond(design) > _CONDITION_LIMIT:
        raise RankDeficientError("design matrix is numerically singular")
    coeffs, *_ = np.linalg.lstsq(design, values, rcond=None)
    return coeffs


def evaluate_polynomial(coeffs: np.ndarray, ts) -> np.ndarray:
    ts = np.asarray(ts, dtype=np.float64)
    return ts[..., None] ** np.arange(len(coeffs)) @ np.asarray(coeffs)


def write_trajectory_csv(path, rows: Iterable[Sequence[float]]) -> None:
    """Trajectory export: header t,x_mm,y_mm, one row per sample, LF endings."""
    with open(path, "w", newline="\n") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["t", "x_mm", "y_mm"])
        for t, x, y in rows:
            writer.writerow([repr(float(t)), repr(float(x)), repr(float(y))])
