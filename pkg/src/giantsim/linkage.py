"""Single-DOF crank-through-guide leg: forward kinematics of the foot point.

The crank pin P orbits the servo axis (origin of the leg frame); the link
slides through a guide pivot G below it and carries the foot at a fixed
distance beyond.  One crank revolution drives the foot through a closed
D-shaped curve: an arched swing over the top and a rounded contact pass
underneath.

Default dimensions come from a grid calibration against the lift profile's
peak (see scripts/calibrate_linkage.py): the vertical extent of the foot
path equals twice the crank radius for this mechanism, independent of link
length.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels

_DEGENERATE_GAP = 1e-9  # mm


class DegenerateGeometryError(ValueError):
    """Crank pin coincides with the guide pivot at some crank angle."""


@dataclass(frozen=True)
class FootPoint:
    x: float  # mm, + = body forward
    y: float  # mm, height relative to the leg frame origin

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("foot point components must be finite")


@dataclass(frozen=True)
class LinkageGeometry:
    crank_radius: float = 13.83
    link_length: float = 60.0
    guide_pivot: tuple[float, float] = (0.0, -45.0)
    foot_offset: float = 20.0

    def __post_init__(self):
        if self.crank_radius <= 0:
            raise ValueError("crank radius must be positive")
        if self.link_length <= math.hypot(*self.guide_pivot) + self.crank_radius:
            raise ValueError("link must reach through the guide at every crank angle")

    @property
    def reach(self) -> float:
        """Pin-to-foot distance along the link."""
        return self.link_length + self.foot_offset


DEFAULT_GEOMETRY = LinkageGeometry()


def foot_position(geom: LinkageGeometry, crank_angle: float) -> FootPoint:
    """Foot location for one crank angle."""
    xs, ys = foot_path(geom, np.array([crank_angle], dtype=np.float64))
    return FootPoint(float(xs[0]), float(ys[0]))


def foot_path(geom: LinkageGeometry, thetas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Foot locations for an array of crank angles."""
    thetas = np.asarray(thetas, dtype=np.float64)
    out_x = np.empty_like(thetas)
    out_y = np.empty_like(thetas)
    gx, gy = geom.guide_pivot
    gap = _kernels.foot_points(geom.crank_radius, geom.reach, gx, gy, thetas, out_x, out_y)
    if gap < _DEGENERATE_GAP:
        raise DegenerateGeometryError("crank pin reached the guide pivot")
    return out_x, out_y


def foot_velocity(geom: LinkageGeometry, crank_angle: float) -> tuple[float, float]:
    """d(foot)/d(crank angle) at one crank angle (mm per radian)."""
    dx, dy = foot_path_derivs(geom, np.array([crank_angle], dtype=np.float64))
    return float(dx[0]), float(dy[0])


def foot_path_derivs(geom: LinkageGeometry, thetas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    thetas = np.asarray(thetas, dtype=np.float64)
    out_dx = np.empty_like(thetas)
    out_dy = np.empty_like(thetas)
    gx, gy = geom.guide_pivot
    gap = _kernels.foot_derivs(geom.crank_radius, geom.reach, gx, gy, thetas, out_dx, out_dy)
    if gap < _DEGENERATE_GAP:
        raise DegenerateGeometryError("crank pin reached the guide pivot")
    return out_dx, out_dy


def vertical_extent(geom: LinkageGeometry, samples: int = 4096) -> float:
    """Height swept by the foot over one crank revolution."""
    thetas = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    _, ys = foot_path(geom, thetas)
    return float(ys.max() - ys.min())
