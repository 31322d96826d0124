"""Leg-coordination state machine.

Legs are velocity-controlled (continuous-rotation servos): a command picks a
mode and per-leg angular velocities, and `advance` integrates phases.  The
two tripod sets walk with a configurable phase offset (90 degrees of the
cycle by default).
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Union

import numpy as np

from .profile import LiftProfile
from .protocol import Command, JogDirection
from .robot import LEG_INDEX, LEG_ORDER, LegId, Rank, Side

PRIMING_TOLERANCE = 1e-3  # time-units

DEFAULT_SET_A = (LegId.LF, LegId.RM, LegId.LR)


class SetId(Enum):
    A = "A"
    B = "B"


class MoveDirection(Enum):
    FORWARD = "Forward"
    BACKWARD = "Backward"
    FORWARD_LEFT = "ForwardLeft"
    FORWARD_RIGHT = "ForwardRight"
    BACKWARD_LEFT = "BackwardLeft"
    BACKWARD_RIGHT = "BackwardRight"


class TurnDirection(Enum):
    LEFT = "Left"
    RIGHT = "Right"


@dataclass(frozen=True)
class Idle:
    def __str__(self):
        return "Idle"


@dataclass(frozen=True)
class Walking:
    direction: MoveDirection

    def __str__(self):
        return f"Walking({self.direction.value})"


@dataclass(frozen=True)
class Turning:
    direction: TurnDirection

    def __str__(self):
        return f"Turning({self.direction.value})"


@dataclass(frozen=True)
class PairJogging:
    pair: int  # 1 = front, 2 = middle, 3 = rear

    def __str__(self):
        return f"PairJog({self.pair})"


@dataclass(frozen=True)
class LegJogging:
    leg: LegId
    direction: JogDirection

    def __str__(self):
        return f"LegJog({self.leg.name},{self.direction.value})"


@dataclass(frozen=True)
class Priming:
    set_id: SetId

    def __str__(self):
        return f"Priming({self.set_id.value})"


Mode = Union[Idle, Walking, Turning, PairJogging, LegJogging, Priming]


@dataclass(frozen=True)
class GaitConfig:
    set_a: tuple[LegId, LegId, LegId] = DEFAULT_SET_A
    phase_offset_deg: float = 90.0
    base_angular_speed: Union[float, None] = None  # rad/time-unit; None = 2*pi/T
    turn_speed_ratio: float = 0.4

    def __post_init__(self):
        if not 0.0 < self.phase_offset_deg < 360.0:
            raise ValueError("phase offset must lie strictly between 0 and 360 degrees")
        if not 0.0 <= self.turn_speed_ratio <= 1.0:
            raise ValueError("turn speed ratio must lie in [0, 1]")
        legs = set(self.set_a)
        if len(legs) != 3 or {leg.rank for leg in legs} != {Rank.FRONT, Rank.MIDDLE, Rank.REAR}:
            raise ValueError("tripod set needs one leg of each rank")
        by_rank = {leg.rank: leg for leg in self.set_a}
        if (by_rank[Rank.FRONT].side is by_rank[Rank.MIDDLE].side
                or by_rank[Rank.MIDDLE].side is by_rank[Rank.REAR].side):
            raise ValueError("tripod set must alternate sides for triangular support")

    @property
    def set_b(self) -> tuple[LegId, ...]:
        return tuple(leg for leg in LEG_ORDER if leg not in self.set_a)

    def legs_of(self, set_id: SetId) -> tuple[LegId, ...]:
        return self.set_a if set_id is SetId.A else self.set_b

    def base_speed(self, profile: LiftProfile) -> float:
        if self.base_angular_speed is not None:
            return self.base_angular_speed
        return 2.0 * math.pi / profile.period

    def offset_time(self, profile: LiftProfile) -> float:
        return self.phase_offset_deg * profile.period / 360.0

    def reference_phase(self, set_id: SetId, profile: LiftProfile) -> float:
        return 0.0 if set_id is SetId.A else self.offset_time(profile)


@dataclass(frozen=True)
class GaitState:
    phases: tuple[float, float, float, float, float, float]
    velocities: tuple[float, float, float, float, float, float]
    mode: Mode

    @staticmethod
    def idle() -> "GaitState":
        return GaitState((0.0,) * 6, (0.0,) * 6, Idle())


_DIRECTION_FOR = {
    Command.FORWARD: MoveDirection.FORWARD,
    Command.BACKWARD: MoveDirection.BACKWARD,
    Command.FORWARD_LEFT: MoveDirection.FORWARD_LEFT,
    Command.FORWARD_RIGHT: MoveDirection.FORWARD_RIGHT,
    Command.BACKWARD_LEFT: MoveDirection.BACKWARD_LEFT,
    Command.BACKWARD_RIGHT: MoveDirection.BACKWARD_RIGHT,
}

_PAIR_RANK = {1: Rank.FRONT, 2: Rank.MIDDLE, 3: Rank.REAR}


def _walking_velocities(cfg: GaitConfig, profile: LiftProfile,
                        direction: MoveDirection) -> tuple[float, ...]:
    base = cfg.base_speed(profile)
    sign = -1.0 if direction.name.startswith("BACKWARD") else 1.0
    inner: Union[Side, None] = None
    if direction.name.endswith("_LEFT"):
        inner = Side.LEFT
    elif direction.name.endswith("_RIGHT"):
        inner = Side.RIGHT
    return tuple(
        sign * base * (cfg.turn_speed_ratio if leg.side is inner else 1.0)
        for leg in LEG_ORDER
    )


def apply_command(state: GaitState, cfg: GaitConfig, profile: LiftProfile,
                  cmd: Command) -> GaitState:
    """Replace the current mode with the one the command names.

    Total over all 26 commands in every mode; a new command preempts the old
    without queueing.  Entering a Walking mode snaps the tripod sets onto the
    canonical phase structure (set A at the phase of its lead leg, set B
    offset by the configured fraction of the cycle).
    """
    if cmd is Command.STOP:
        return GaitState(state.phases, (0.0,) * 6, Idle())

    if cmd in _DIRECTION_FOR:
        direction = _DIRECTION_FOR[cmd]
        anchor = state.phases[LEG_INDEX[cfg.set_a[0]]]
        offset = cfg.offset_time(profile)
        period = profile.period
        phases = tuple(
            anchor if leg in cfg.set_a else (anchor + offset) % period
            for leg in LEG_ORDER
        )
        return GaitState(phases, _walking_velocities(cfg, profile, direction),
                         Walking(direction))

    base = cfg.base_speed(profile)

    if cmd in (Command.LEFT, Command.RIGHT):
        turn = TurnDirection.LEFT if cmd is Command.LEFT else TurnDirection.RIGHT
        backward_side = Side.LEFT if turn is TurnDirection.LEFT else Side.RIGHT
        velocities = tuple(
            -base if leg.side is backward_side else base for leg in LEG_ORDER
        )
        return GaitState(state.phases, velocities, Turning(turn))

    if cmd.pair is not None:
        rank = _PAIR_RANK[cmd.pair]
        velocities = tuple(base if leg.rank is rank else 0.0 for leg in LEG_ORDER)
        return GaitState(state.phases, velocities, PairJogging(cmd.pair))

    if cmd.jog_leg is not None:
        sign = 1.0 if cmd.jog_direction is JogDirection.UP else -1.0
        velocities = tuple(
            sign * base if leg is cmd.jog_leg else 0.0 for leg in LEG_ORDER
        )
        return GaitState(state.phases, velocities, LegJogging(cmd.jog_leg, cmd.jog_direction))

    set_id = SetId.A if cmd is Command.PRIME_SET_A else SetId.B
    primed = cfg.legs_of(set_id)
    velocities = tuple(base if leg in primed else 0.0 for leg in LEG_ORDER)
    return GaitState(state.phases, velocities, Priming(set_id))


def _circular_distance(a: float, b: float, period: float) -> float:
    d = abs(a - b) % period
    return min(d, period - d)


def advance(state: GaitState, cfg: GaitConfig, profile: LiftProfile,
            dt: float) -> GaitState:
    """Integrate leg phases forward by dt time-units."""
    if dt < 0:
        raise ValueError("dt must be nonnegative")
    if dt == 0:
        return state
    period = profile.period
    factor = dt * period / (2.0 * math.pi)

    if isinstance(state.mode, Priming):
        primed = set(cfg.legs_of(state.mode.set_id))
        target = cfg.reference_phase(state.mode.set_id, profile)
        phases = list(state.phases)
        velocities = list(state.velocities)
        for i, leg in enumerate(LEG_ORDER):
            step = velocities[i] * factor
            if leg in primed and velocities[i] > 0.0:
                remaining = (target - phases[i]) % period
                if step + 1e-12 >= remaining:
                    phases[i] = target
                    velocities[i] = 0.0
                else:
                    phases[i] = (phases[i] + step) % period
            else:
                phases[i] = (phases[i] + step) % period
        done = all(
            _circular_distance(phases[LEG_INDEX[leg]], target, period) <= PRIMING_TOLERANCE
            for leg in primed
        )
        if done:
            return GaitState(tuple(phases), (0.0,) * 6, Idle())
        return GaitState(tuple(phases), tuple(velocities), state.mode)

    phases = tuple(
        (p + v * factor) % period for p, v in zip(state.phases, state.velocities)
    )
    return replace(state, phases=phases)


def stance_set(state: GaitState, profile: LiftProfile) -> frozenset[LegId]:
    """Legs whose profile height is at or below the contact threshold."""
    heights = profile.heights(np.array(state.phases))
    return frozenset(
        leg for leg, h in zip(LEG_ORDER, heights) if h <= profile.contact_threshold
    )
