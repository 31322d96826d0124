"""Terrain feature classification and the coordinated-posture climb model.

Climb/pebble/load envelopes follow the measured performance table; step
reach comes from pitching the body with the rear legs low and the middle
legs high, then adding the front leg's own lift.
"""

import math
from dataclasses import dataclass
from enum import Enum, IntEnum

import numpy as np

from .profile import LiftProfile
from .robot import RobotSpec


class Difficulty(IntEnum):
    """Ordered so that comparisons mean 'at least as hard'."""

    EASY = 0
    DIFFICULT = 1
    IMPOSSIBLE = 2


class FeatureKind(Enum):
    FLAT = "flat"
    STEP = "step"
    PEBBLES = "pebbles"
    GRASS = "grass"


@dataclass(frozen=True)
class TerrainFeature:
    kind: FeatureKind
    height_cm: float = 0.0    # steps
    diameter_cm: float = 0.0  # pebbles

    def __post_init__(self):
        if self.height_cm < 0:
            raise ValueError("step height must be nonnegative")
        if self.diameter_cm < 0:
            raise ValueError("pebble diameter must be nonnegative")

    @staticmethod
    def flat() -> "TerrainFeature":
        return TerrainFeature(FeatureKind.FLAT)

    @staticmethod
    def grass() -> "TerrainFeature":
        return TerrainFeature(FeatureKind.GRASS)

    @staticmethod
    def step(height_cm: float) -> "TerrainFeature":
        return TerrainFeature(FeatureKind.STEP, height_cm=height_cm)

    @staticmethod
    def pebbles(diameter_cm: float) -> "TerrainFeature":
        return TerrainFeature(FeatureKind.PEBBLES, diameter_cm=diameter_cm)

    def label(self) -> str:
        if self.kind is FeatureKind.STEP:
            return f"step({self.height_cm:g}cm)"
        if self.kind is FeatureKind.PEBBLES:
            return f"pebbles({self.diameter_cm:g}cm)"
        return self.kind.value

    def difficulty(self) -> Difficulty:
        if self.kind is FeatureKind.STEP:
            return climb_class(self.height_cm)
        if self.kind is FeatureKind.PEBBLES:
            return pebble_class(self.diameter_cm)
        return Difficulty.EASY


@dataclass(frozen=True)
class Posture:
    """Commanded per-rank leg lifts (mm)."""

    rear: float
    middle: float
    front: float

    def validate(self, max_lift: float) -> "Posture":
        for name, lift in (("rear", self.rear), ("middle", self.middle), ("front", self.front)):
            if not 0.0 <= lift <= max_lift:
                raise ValueError(f"{name} lift {lift} outside [0, {max_lift}]")
        return self


@dataclass(frozen=True)
class LoadConfig:
    payload_kg: float
    servo_rating_kgf_cm: float

    def __post_init__(self):
        if self.payload_kg < 0:
            raise ValueError("payload must be nonnegative")
        if self.servo_rating_kgf_cm <= 0:
            raise ValueError("servo rating must be positive")


class LoadVerdict(Enum):
    SUPPORTED = "supported"
    OVERSIZED = "oversized"


def climb_class(height_cm: float) -> Difficulty:
    """Step-height envelope: <=5cm easy, <=8cm difficult, above impossible."""
    if height_cm < 0:
        raise ValueError("step height must be nonnegative")
    if height_cm <= 5.0:
        return Difficulty.EASY
    if height_cm <= 8.0:
        return Difficulty.DIFFICULT
    return Difficulty.IMPOSSIBLE


def pebble_class(diameter_cm: float) -> Difficulty:
    """Pebble envelope: fine up to 3cm diameter, difficult beyond."""
    if diameter_cm < 0:
        raise ValueError("pebble diameter must be nonnegative")
    return Difficulty.EASY if diameter_cm <= 3.0 else Difficulty.DIFFICULT


# Published anchor points: 2.5kg at the stock 10 kgf·cm servos, 5kg at 20.
_LOAD_ANCHORS = ((10.0, 2.5), (20.0, 5.0))


def load_capacity_kg(servo_rating_kgf_cm: float) -> float:
    (r0, c0), (r1, c1) = _LOAD_ANCHORS
    capacity = c0 + (servo_rating_kgf_cm - r0) * (c1 - c0) / (r1 - r0)
    return max(capacity, 0.0)


def load_capacity(cfg: LoadConfig) -> LoadVerdict:
    if cfg.payload_kg <= load_capacity_kg(cfg.servo_rating_kgf_cm):
        return LoadVerdict.SUPPORTED
    return LoadVerdict.OVERSIZED


def posture_pitch(spec: RobotSpec, posture: Posture) -> float:
    """Body pitch (rad) when rear and middle legs hold different lifts."""
    rear_x, middle_x, _ = spec.leg_mount_x
    return math.atan((posture.middle - posture.rear) / (middle_x - rear_x))


def max_step_reach(spec: RobotSpec, profile: LiftProfile, posture: Posture) -> float:
    """Height (mm) the front feet can reach with the body pitched by the posture."""
    posture.validate(profile.peak_height)
    _, middle_x, front_x = spec.leg_mount_x
    pitch = posture_pitch(spec, posture)
    return posture.middle + (front_x - middle_x) * math.tan(pitch) + posture.front


def optimal_posture(profile: LiftProfile) -> Posture:
    return Posture(rear=0.0, middle=profile.peak_height, front=profile.peak_height)


def climb_envelope(spec: RobotSpec, profile: LiftProfile, steps_per_axis: int = 22) -> np.ndarray:
    """Posture-grid sweep: rows of (rear, middle, front, reach), all mm."""
    lifts = np.linspace(0.0, profile.peak_height, steps_per_axis)
    rear, middle, front = np.meshgrid(lifts, lifts, lifts, indexing="ij")
    rear_x, middle_x, front_x = spec.leg_mount_x
    pitch = np.arctan((middle - rear) / (middle_x - rear_x))
    reach = middle + (front_x - middle_x) * np.tan(pitch) + front
    return np.column_stack([rear.ravel(), middle.ravel(), front.ravel(), reach.ravel()])
