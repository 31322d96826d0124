"""Command-line surface: serve / simulate / analyze / protocol-table.

Exit codes for `simulate`: 0 success, 2 toppled, 3 scenario/script parse
errors.  GIANT_SIM_SEED is reserved for future stochastic features; the
simulator is deterministic and ignores it.
"""

import argparse
import signal
import sys
import threading

import numpy as np

from .analysis import write_trajectory_csv
from .linkage import DEFAULT_GEOMETRY, foot_path
from .profile import LiftProfile
from .protocol import wire_table
from .robot import RobotSpec
from .scenario import ScenarioError, parse_scenario, parse_script
from .service import PortInUseError, ServiceConfig, SimulatorService
from .sim import crank_angles, export_telemetry, make_world, run_script
from .terrain import climb_envelope


def _cmd_serve(args) -> int:
    try:
        cfg = ServiceConfig(command_port=args.command_port,
                            telemetry_port=args.telemetry_port,
                            tick_rate=args.tick_rate,
                            scenario_path=args.scenario)
        service = SimulatorService(cfg)
        service.start()
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 3
    except (PortInUseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print(f"listening command={service.command_port} telemetry={service.telemetry_port}",
          flush=True)
    done = threading.Event()

    def _shutdown(signum, frame):
        done.set()

    signal.signal(signal.SIGINT, _shutdown)
    signal.signal(signal.SIGTERM, _shutdown)
    done.wait()
    service.stop()
    return 0


def _cmd_simulate(args) -> int:
    try:
        with open(args.scenario) as f:
            world = parse_scenario(f.read())
        with open(args.script) as f:
            script, duration = parse_script(f.read())
    except (OSError, ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    snapshots = run_script(world, script, duration=duration)
    with open(args.out, "w", newline="\n") as f:
        f.write(export_telemetry(snapshots))
    toppled = any("toppled" in snap.ann for snap in snapshots)
    return 2 if toppled else 0


def _cmd_analyze(args) -> int:
    profile = LiftProfile()
    spec = RobotSpec()
    try:
        if args.kind == "lift-profile":
            ts = np.linspace(0.0, profile.period, 501)
            heights = profile.heights(ts)
            write_trajectory_csv(args.out, zip(ts, np.zeros_like(ts), heights))
        elif args.kind == "foot-path":
            ts = np.linspace(0.0, profile.period, 501)
            xs, ys = foot_path(DEFAULT_GEOMETRY, crank_angles(profile, ts))
            write_trajectory_csv(args.out, zip(ts, xs, ys))
        else:
            rows = climb_envelope(spec, profile)
            with open(args.out, "w", newline="\n") as f:
                f.write("rear_mm,middle_mm,front_mm,reach_mm\n")
                for rear, middle, front, reach in rows:
                    f.write(f"{float(rear)!r},{float(middle)!r},"
                            f"{float(front)!r},{float(reach)!r}\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_protocol_table(args) -> int:
    for byte, name in wire_table():
        print(f"{byte}\t{name}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="giantsim")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the teleop service")
    p.add_argument("--command-port", type=int, default=7060)
    p.add_argument("--telemetry-port", type=int, default=7061)
    p.add_argument("--tick-rate", type=float, default=100.0)
    p.add_argument("--scenario", default=None)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("simulate", help="run a scripted simulation offline")
    p.add_argument("--scenario", required=True)
    p.add_argument("--script", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("analyze", help="export analysis CSVs")
    p.add_argument("--kind", required=True,
                   choices=["lift-profile", "foot-path", "climb-envelope"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("protocol-table", help="print the v1 wire table")
    p.set_defaults(func=_cmd_protocol_table)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
