"""Time-stepped kinematic world.

Propulsion is purely kinematic: stance feet are treated as the fixed points,
so body velocity is the negated mean horizontal foot velocity of the stance
legs, and the left/right stance differential turns the body with the track
width as the lever (differential-drive approximation).  Stance and propulsion
are sampled at the midpoint of each tick, which makes a Backward run retrace
a Forward run through the exact same sample points.
"""

import json
import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Union

import numpy as np

from . import gait as gait_mod
from .gait import GaitConfig, GaitState, Idle
from .linkage import DEFAULT_GEOMETRY, LinkageGeometry, foot_path, foot_path_derivs
from .profile import LiftProfile
from .protocol import Command
from .robot import LEG_ORDER, LegId, RobotSpec, Side
from .terrain import (Difficulty, FeatureKind, Posture, TerrainFeature,
                      max_step_reach, optimal_posture, posture_pitch)

MAX_PITCH = math.radians(30.0)
DIFFICULT_SPEED_FACTOR = 0.5
_WALL_GAP = 1e-9  # mm kept between the robot and a refused step


class BadScriptError(ValueError):
    """Script times must be nondecreasing."""


@dataclass(frozen=True)
class RobotState:
    position: tuple[float, float]  # mm, world frame
    heading: float                 # rad, CCW from +x
    pitch: float                   # rad
    gait: GaitState
    stance: frozenset[LegId]
    grounded: bool


@dataclass(frozen=True)
class LegTelemetry:
    id: str
    phase: float
    h: float
    stance: bool


@dataclass(frozen=True)
class TelemetrySnapshot:
    t: float
    pos: tuple[float, float]
    heading: float
    pitch: float
    legs: tuple[LegTelemetry, ...]
    mode: str
    stable: bool
    terrain: str
    ann: tuple[str, ...]

    def to_json_line(self) -> str:
        record = {
            "t": self.t,
            "pos": list(self.pos),
            "heading": self.heading,
            "pitch": self.pitch,
            "legs": [
                {"id": leg.id, "phase": leg.phase, "h": leg.h, "stance": leg.stance}
                for leg in self.legs
            ],
            "mode": self.mode,
            "stable": self.stable,
            "terrain": self.terrain,
            "ann": list(self.ann),
        }
        return json.dumps(record, separators=(",", ":"))


@dataclass(frozen=True)
class World:
    spec: RobotSpec
    profile: LiftProfile
    geometry: LinkageGeometry
    gait_cfg: GaitConfig
    features: tuple[tuple[float, float, TerrainFeature], ...]
    posture: Posture
    robot: RobotState
    time: float = 0.0
    stable: bool = False
    toppled: bool = False
    unstable_since: Union[float, None] = None
    climb_until: Union[float, None] = None
    climb_pitch: float = 0.0
    blocked_feature: Union[int, None] = None
    events: tuple[str, ...] = ()

    def active_feature(self) -> Union[TerrainFeature, None]:
        x = self.robot.position[0]
        for x0, x1, feature in self.features:
            if x0 <= x <= x1:
                return feature
        return None

    def terrain_label(self) -> str:
        feature = self.active_feature()
        return feature.label() if feature is not None else "flat"


def make_world(spec: Union[RobotSpec, None] = None,
               profile: Union[LiftProfile, None] = None,
               geometry: LinkageGeometry = DEFAULT_GEOMETRY,
               gait_cfg: Union[GaitConfig, None] = None,
               features: Sequence[tuple[float, float, TerrainFeature]] = (),
               posture: Union[Posture, None] = None,
               position: tuple[float, float] = (0.0, 0.0),
               heading: float = 0.0) -> World:
    spec = spec if spec is not None else RobotSpec()
    profile = profile if profile is not None else LiftProfile()
    gait_cfg = gait_cfg if gait_cfg is not None else GaitConfig()
    posture = (posture if posture is not None else optimal_posture(profile))
    posture.validate(profile.peak_height)

    ordered = sorted(features, key=lambda f: f[0])
    for (a0, a1, _), (b0, b1, _) in zip(ordered, ordered[1:]):
        if b0 < a1:
            raise ValueError("terrain feature ranges must not overlap")
    for x0, x1, _ in ordered:
        if x1 <= x0:
            raise ValueError("terrain feature range must have positive width")

    state = GaitState.idle()
    stance = gait_mod.stance_set(state, profile)
    robot = RobotState(position, heading, 0.0, state, stance, bool(stance))
    world = World(spec, profile, geometry, gait_cfg, tuple(ordered), posture, robot)
    return replace(world, stable=static_stability(robot, spec, profile, geometry))


def crank_angles(profile: LiftProfile, phases) -> np.ndarray:
    """Map gait phases to crank angles: the profile's lowest point sits at
    bottom dead centre of the crank."""
    phases = np.asarray(phases, dtype=np.float64)
    return -0.5 * np.pi + 2.0 * np.pi * (phases - profile.argmin_time) / profile.period


def support_polygon_contains(points: np.ndarray, probe=(0.0, 0.0)) -> bool:
    """Strict containment of a probe point in the convex hull of `points`.

    Fewer than three points, or a degenerate (collinear) hull, never contain.
    """
    pts = np.asarray(points, dtype=np.float64)
    if len(pts) < 3:
        return False
    unique = sorted({(float(x), float(y)) for x, y in pts})
    if len(unique) < 3:
        return False

    def half_hull(seq):
        hull = []
        for p in seq:
            while len(hull) >= 2:
                ax, ay = hull[-2]
                bx, by = hull[-1]
                if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) <= 0:
                    hull.pop()
                else:
                    break
            hull.append(p)
        return hull

    lower = half_hull(unique)
    upper = half_hull(reversed(unique))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return False
    px, py = probe
    for (ax, ay), (bx, by) in zip(hull, hull[1:] + hull[:1]):
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 0:
            return False
    return True


def stance_footprint(state: RobotState, spec: RobotSpec, profile: LiftProfile,
                     geometry: LinkageGeometry) -> np.ndarray:
    """Plan-view (x, y) of the stance feet in the body frame."""
    legs = [leg for leg in LEG_ORDER if leg in state.stance]
    if not legs:
        return np.empty((0, 2))
    phases = np.array([state.gait.phases[LEG_ORDER.index(leg)] for leg in legs])
    xs, _ = foot_path(geometry, crank_angles(profile, phases))
    return np.array([
        [spec.mount_x(leg) + xs[i], spec.mount_y(leg)] for i, leg in enumerate(legs)
    ])


def static_stability(state: RobotState, spec: RobotSpec,
                     profile: Union[LiftProfile, None] = None,
                     geometry: LinkageGeometry = DEFAULT_GEOMETRY) -> bool:
    """Body-centre ground projection strictly inside the stance foot hull."""
    if len(state.stance) < 3:
        return False
    profile = profile if profile is not None else LiftProfile()
    return support_polygon_contains(stance_footprint(state, spec, profile, geometry))


def _propulsion(world: World, state: GaitState) -> tuple[float, float]:
    """Forward speed (mm/time-unit) and yaw rate (rad/time-unit) from the
    stance legs of the given (midpoint) gait state."""
    profile = world.profile
    heights = profile.heights(np.array(state.phases))
    in_stance = heights <= profile.contact_threshold
    if not np.any(in_stance):
        return 0.0, 0.0
    thetas = crank_angles(profile, np.array(state.phases))
    dxs, _ = foot_path_derivs(world.geometry, thetas)

    def tread(side: Side) -> float:
        vels = [
            dxs[i] * state.velocities[i]
            for i, leg in enumerate(LEG_ORDER)
            if in_stance[i] and leg.side is side
        ]
        if not vels:
            return 0.0
        return -sum(vels) / len(vels)

    u_left = tread(Side.LEFT)
    u_right = tread(Side.RIGHT)
    forward = 0.5 * (u_left + u_right)
    yaw_rate = (u_right - u_left) / world.spec.body_width
    return forward, yaw_rate


def tick(world: World, dt: float) -> World:
    """Advance the world by dt time-units (dt must lie in (0, T/20])."""
    period = world.profile.period
    if not 0.0 < dt <= period / 20.0 + 1e-12:
        raise ValueError(f"dt must lie in (0, T/20] = (0, {period / 20.0}]")
    if world.toppled:
        return replace(world, time=world.time + dt)

    cfg = world.gait_cfg
    profile = world.profile
    robot = world.robot
    # events accumulate across ticks until drain_events() publishes them
    events: list[str] = list(world.events)

    mid = gait_mod.advance(robot.gait, cfg, profile, dt / 2.0)
    forward, yaw_rate = _propulsion(world, mid)

    # Difficult terrain halves translational speed while the robot is on it.
    active = world.active_feature()
    if active is not None and active.difficulty() >= Difficulty.DIFFICULT:
        forward *= DIFFICULT_SPEED_FACTOR

    x, y = robot.position
    heading = robot.heading + yaw_rate * dt
    step = forward * dt
    x_new = x + math.cos(robot.heading) * step
    y_new = y + math.sin(robot.heading) * step

    # Step features gate entry into their range: the front edge is a wall
    # unless the commanded posture can reach the step height.
    climb_until = world.climb_until
    climb_pitch = world.climb_pitch
    blocked: Union[int, None] = None
    for idx, (x0, x1, feature) in enumerate(world.features):
        if feature.kind is not FeatureKind.STEP:
            continue
        inside = x0 <= x <= x1
        if inside:
            continue
        crosses = (min(x, x_new) <= x1) and (max(x, x_new) >= x0)
        if not crosses:
            continue
        reach = max_step_reach(world.spec, profile, world.posture)
        if reach >= feature.height_cm * 10.0:
            climb_until = world.time + dt + period
            climb_pitch = posture_pitch(world.spec, world.posture)
            events.append(f"climb_started({feature.height_cm:g}cm)")
        else:
            if x < x0:
                x_clamp = x0 - _WALL_GAP
            else:
                x_clamp = x1 + _WALL_GAP
            frac = (x_clamp - x) / (x_new - x) if x_new != x else 0.0
            y_new = y + (y_new - y) * frac
            x_new = x_clamp
            blocked = idx
            if world.blocked_feature != idx:
                events.append(f"step_refused({feature.height_cm:g}cm)")
        break

    new_time = world.time + dt

    # Pitch ramps up and back down over one cycle while climbing.
    pitch = 0.0
    if climb_until is not None:
        if new_time < climb_until:
            tau = 1.0 - (climb_until - new_time) / period
            pitch = climb_pitch * (1.0 - abs(2.0 * tau - 1.0))
        else:
            climb_until = None

    end = gait_mod.advance(mid, cfg, profile, dt / 2.0)
    stance = gait_mod.stance_set(end, profile)
    new_robot = RobotState((x_new, y_new), heading, pitch, end, stance, bool(stance))

    stable = static_stability(new_robot, world.spec, profile, world.geometry)
    toppled = world.toppled
    unstable_since = world.unstable_since
    moving = any(v != 0.0 for v in end.velocities)
    if stable or not moving:
        unstable_since = None
    elif unstable_since is None:
        unstable_since = world.time
    if abs(pitch) > MAX_PITCH:
        toppled = True
    if unstable_since is not None and new_time - unstable_since > period:
        toppled = True  # snapshot() carries the persistent "toppled" tag

    return replace(world, robot=new_robot, time=new_time, stable=stable,
                   toppled=toppled, unstable_since=unstable_since,
                   climb_until=climb_until, climb_pitch=climb_pitch,
                   blocked_feature=blocked, events=tuple(events))


def apply_to_world(world: World, cmd: Command) -> World:
    state = gait_mod.apply_command(world.robot.gait, world.gait_cfg, world.profile, cmd)
    return replace(world, robot=replace(world.robot, gait=state))


def reset_world(world: World) -> World:
    """Clear a toppled latch: level the body and idle the gait in place."""
    state = GaitState(world.robot.gait.phases, (0.0,) * 6, Idle())
    stance = gait_mod.stance_set(state, world.profile)
    robot = replace(world.robot, pitch=0.0, gait=state, stance=stance,
                    grounded=bool(stance))
    return replace(world, robot=robot, toppled=False, unstable_since=None,
                   climb_until=None, climb_pitch=0.0, events=())


def drain_events(world: World) -> World:
    """Clear published events; call right after emitting a snapshot."""
    return replace(world, events=())


def snapshot(world: World) -> TelemetrySnapshot:
    robot = world.robot
    heights = world.profile.heights(np.array(robot.gait.phases))
    legs = tuple(
        LegTelemetry(leg.name, robot.gait.phases[i], float(heights[i]),
                     bool(heights[i] <= world.profile.contact_threshold))
        for i, leg in enumerate(LEG_ORDER)
    )
    ann = list(world.events)
    if world.toppled:
        ann.append("toppled")
    if not robot.grounded:
        ann.append("not_grounded")
    return TelemetrySnapshot(
        t=world.time,
        pos=robot.position,
        heading=robot.heading,
        pitch=robot.pitch,
        legs=legs,
        mode=str(robot.gait.mode),
        stable=world.stable,
        terrain=world.terrain_label(),
        ann=tuple(ann),
    )


def run_script(world: World, script: Sequence[tuple[float, Command]],
               duration: Union[float, None] = None,
               dt: Union[float, None] = None,
               sample_interval: Union[float, None] = None) -> list[TelemetrySnapshot]:
    """Deterministic replay: apply script commands at tick boundaries and
    emit snapshots at a fixed sample interval (default T/50)."""
    times = [t for t, _ in script]
    if any(b < a for a, b in zip(times, times[1:])):
        raise BadScriptError("script times must be nondecreasing")

    period = world.profile.period
    dt = dt if dt is not None else period / 100.0
    sample_interval = sample_interval if sample_interval is not None else period / 50.0
    every = max(1, round(sample_interval / dt))
    if duration is None:
        duration = (times[-1] if times else period) + 2.0 * period
    n_ticks = max(0, round(duration / dt))

    pending = list(script)
    snapshots: list[TelemetrySnapshot] = []

    while pending and pending[0][0] <= world.time + 1e-9:
        world = apply_to_world(world, pending.pop(0)[1])
    snapshots.append(snapshot(world))
    world = drain_events(world)

    for i in range(1, n_ticks + 1):
        while pending and pending[0][0] <= world.time + 1e-9:
            world = apply_to_world(world, pending.pop(0)[1])
        world = tick(world, dt)
        if i % every == 0:
            snapshots.append(snapshot(world))
            world = drain_events(world)
    return snapshots


def export_telemetry(snapshots: Iterable[TelemetrySnapshot]) -> str:
    """Newline-delimited records, one JSON object per snapshot."""
    return "".join(snap.to_json_line() + "\n" for snap in snapshots)
