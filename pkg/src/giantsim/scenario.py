"""Line-oriented scenario and script files.

Scenario lines (blank lines and # comments ignored):

    terrain <x0_mm> <x1_mm> flat|grass|step:<height_cm>|pebbles:<diameter_cm>
    pose <x_mm> <y_mm> <heading_rad>
    posture <rear_mm> <middle_mm> <front_mm>
    phase_offset <degrees>
    turn_speed_ratio <fraction>
    contact_threshold <mm>

Script lines:

    <time_units> <command-letter>
    duration <time_units>        # optional override of the run length
"""

from dataclasses import replace
from typing import Union

from .gait import GaitConfig
from .profile import LiftProfile
from .protocol import Command, UnknownByteError, decode
from .sim import World, make_world
from .terrain import FeatureKind, Posture, TerrainFeature


class ScenarioError(ValueError):
    pass


def _feature_from_token(token: str) -> TerrainFeature:
    kind, _, arg = token.partition(":")
    try:
        if kind == "flat":
            return TerrainFeature.flat()
        if kind == "grass":
            return TerrainFeature.grass()
        if kind == "step":
            return TerrainFeature.step(float(arg))
        if kind == "pebbles":
            return TerrainFeature.pebbles(float(arg))
    except ValueError as exc:
        raise ScenarioError(f"bad terrain feature {token!r}: {exc}") from exc
    raise ScenarioError(f"unknown terrain kind {kind!r}")


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_scenario(text: str) -> World:
    features = []
    position = (0.0, 0.0)
    heading = 0.0
    posture: Union[Posture, None] = None
    gait_kwargs = {}
    threshold: Union[float, None] = None

    for lineno, parts in _meaningful_lines(text):
        key, args = parts[0], parts[1:]
        try:
            if key == "terrain" and len(args) == 3:
                features.append((float(args[0]), float(args[1]),
                                 _feature_from_token(args[2])))
            elif key == "pose" and len(args) == 3:
                position = (float(args[0]), float(args[1]))
                heading = float(args[2])
            elif key == "posture" and len(args) == 3:
                posture = Posture(float(args[0]), float(args[1]), float(args[2]))
            elif key == "phase_offset" and len(args) == 1:
                gait_kwargs["phase_offset_deg"] = float(args[0])
            elif key == "turn_speed_ratio" and len(args) == 1:
                gait_kwargs["turn_speed_ratio"] = float(args[0])
            elif key == "contact_threshold" and len(args) == 1:
                threshold = float(args[0])
            else:
                raise ScenarioError(f"line {lineno}: unrecognized directive {key!r}")
        except ScenarioError:
            raise
        except ValueError as exc:
            raise ScenarioError(f"line {lineno}: {exc}") from exc

    try:
        profile = LiftProfile() if threshold is None else LiftProfile(contact_threshold=threshold)
        cfg = GaitConfig(**gait_kwargs)
        return make_world(profile=profile, gait_cfg=cfg, features=features,
                          posture=posture, position=position, heading=heading)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc


def parse_script(text: str) -> tuple[list[tuple[float, Command]], Union[float, None]]:
    """Returns (commands, duration override or None)."""
    commands: list[tuple[float, Command]] = []
    duration: Union[float, None] = None
    for lineno, parts in _meaningful_lines(text):
        if parts[0] == "duration" and len(parts) == 2:
            try:
                duration = float(parts[1])
            except ValueError as exc:
                raise ScenarioError(f"line {lineno}: {exc}") from exc
            continue
        if len(parts) != 2:
            raise ScenarioError(f"line {lineno}: expected '<time> <command-letter>'")
        try:
            t = float(parts[0])
        except ValueError as exc:
            raise ScenarioError(f"line {lineno}: {exc}") from exc
        letter = parts[1]
        if len(letter) != 1:
            raise ScenarioError(f"line {lineno}: command must be a single byte")
        try:
            commands.append((t, decode(ord(letter))))
        except UnknownByteError as exc:
            raise ScenarioError(f"line {lineno}: {exc}") from exc
    return commands, duration
