"""Fixed machine constants: leg naming and body geometry."""

from dataclasses import dataclass, field
from enum import Enum


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"


class Rank(Enum):
    FRONT = "F"
    MIDDLE = "M"
    REAR = "R"


class LegId(Enum):
    """Six legs, named side-first (LF = left front)."""

    LF = (Side.LEFT, Rank.FRONT)
    LM = (Side.LEFT, Rank.MIDDLE)
    LR = (Side.LEFT, Rank.REAR)
    RF = (Side.RIGHT, Rank.FRONT)
    RM = (Side.RIGHT, Rank.MIDDLE)
    RR = (Side.RIGHT, Rank.REAR)

    @property
    def side(self) -> Side:
        return self.value[0]

    @property
    def rank(self) -> Rank:
        return self.value[1]


# Canonical ordering used for all per-leg arrays and telemetry.
LEG_ORDER = (LegId.LF, LegId.LM, LegId.LR, LegId.RF, LegId.RM, LegId.RR)
LEG_INDEX = {leg: i for i, leg in enumerate(LEG_ORDER)}


@dataclass(frozen=True)
class RobotSpec:
    """Geometry, mass and actuator constants of the machine (mm, kg, kgf·cm)."""

    body_length: float = 310.0
    body_width: float = 200.0
    body_height: float = 120.0
    mass: float = 1.75
    servo_torque: float = 10.0
    # Along the body axis, rear / middle / front leg pairs.
    leg_mount_x: tuple[float, float, float] = (-120.0, 0.0, 120.0)
    leg_count: int = 6

    def __post_init__(self):
        for name in ("body_length", "body_width", "body_height", "mass", "servo_torque"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.leg_count != 6:
            raise ValueError("leg_count must be 6")
        rear, middle, front = self.leg_mount_x
        if not (rear < middle < front):
            raise ValueError("leg mount x positions must increase rear -> front")

    def mount_x(self, leg: LegId) -> float:
        rear, middle, front = self.leg_mount_x
        return {Rank.REAR: rear, Rank.MIDDLE: middle, Rank.FRONT: front}[leg.rank]

    def mount_y(self, leg: LegId) -> float:
        """Lateral mount offset; +y is the robot's left."""
        half = self.body_width / 2.0
        return half if leg.side is Side.LEFT else -half
