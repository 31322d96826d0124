"""Periodic foot-lift profile: a quartic in gait time, clamped at the ground.

The default coefficients are the fitted single-leg height curve; gait time is
dimensionless ("time-units"), heights are mm.  The cycle period is not an
input: it is derived as the first rising recurrence of the starting height.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels

DEFAULT_COEFFICIENTS = (27.66182, -1.67994, -0.00283, 0.00147, -1.59275e-5)

_SCAN_LIMIT = 1000.0
_SCAN_SAMPLES = 1_000_000
_RECURRENCE_BAND = 0.5  # mm


class NoPeriodError(ValueError):
    """The profile never returns to its starting height while rising."""


@dataclass(frozen=True)
class LiftProfile:
    coefficients: tuple[float, float, float, float, float] = DEFAULT_COEFFICIENTS
    contact_threshold: float = 3.0

    def __post_init__(self):
        if len(self.coefficients) != 5:
            raise ValueError("profile takes exactly 5 polynomial coefficients")
        if self.contact_threshold < 0:
            raise ValueError("contact_threshold must be nonnegative")

    @cached_property
    def period(self) -> float:
        return derive_period(self)

    @cached_property
    def argmin_time(self) -> float:
        """Time of the lowest point within one cycle."""
        t, _ = self._extremum(np.argmin)
        return t

    @cached_property
    def peak_height(self) -> float:
        """Highest point within one cycle (mm)."""
        _, h = self._extremum(np.argmax)
        return max(h, 0.0)

    def _extremum(self, pick):
        # Candidates: endpoints plus real roots of the derivative inside (0, T).
        c = self.coefficients
        deriv = np.array([4 * c[4], 3 * c[3], 2 * c[2], c[1]])
        candidates = [0.0, self.period]
        if np.any(deriv != 0):
            for root in np.roots(deriv):
                if abs(root.imag) < 1e-9 and 0.0 < root.real < self.period:
                    candidates.append(float(root.real))
        ts = np.array(sorted(candidates))
        ys = self.heights(ts)
        i = pick(ys)
        return float(ts[i]), float(ys[i])

    def raw_height(self, t: float) -> float:
        """Unwrapped, unclamped quartic value (for period derivation)."""
        c = self.coefficients
        return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])))

    def raw_slope(self, t: float) -> float:
        c = self.coefficients
        return c[1] + t * (2 * c[2] + t * (3 * c[3] + t * 4 * c[4]))

    def height(self, t: float) -> float:
        return float(self.heights(np.array([t]))[0])

    def heights(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        out = np.empty_like(ts)
        c = self.coefficients
        _kernels.lift_heights(c[0], c[1], c[2], c[3], c[4], self.period, ts, out)
        return out


def lift_height(profile: LiftProfile, t: float) -> float:
    """Foot height above ground at gait time t (wrapped into one cycle)."""
    return profile.height(t)


def derive_period(profile: LiftProfile) -> float:
    """First rising recurrence of the starting height.

    Dense scan over (0, 1000] followed by bisection on the exact crossing.
    When the profile re-enters the ±0.5mm band around height(0) while rising
    but never crosses exactly, the first such sample is returned instead.
    """
    c = profile.coefficients
    y0 = profile.raw_height(0.0)
    ts = np.linspace(0.0, _SCAN_LIMIT, _SCAN_SAMPLES + 1)
    x = ts
    ys = c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * c[4])))
    slopes = c[1] + x * (2 * c[2] + x * (3 * c[3] + x * 4 * c[4]))
    diff = ys - y0

    rising = np.nonzero((diff[:-1] < 0.0) & (diff[1:] >= 0.0) & (slopes[1:] > 0.0))[0]
    if rising.size:
        lo, hi = ts[rising[0]], ts[rising[0] + 1]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if profile.raw_height(mid) - y0 < 0.0:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    # No exact crossing: accept a near-recurrence, but only after the profile
    # has actually left the band (rules out constants and t ~ 0).
    outside = np.nonzero(np.abs(diff) > _RECURRENCE_BAND)[0]
    if outside.size:
        later = np.nonzero(
            (np.abs(diff) <= _RECURRENCE_BAND) & (slopes > 0.0) & (ts > ts[outside[0]])
        )[0]
        if later.size:
            return float(ts[later[0]])
    raise NoPeriodError("no rising recurrence of height(0) in (0, 1000]")
