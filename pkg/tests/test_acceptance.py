"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line.  Run with `pytest tests/test_acceptance.py -v -s`."""

import contextlib
import json
import math
import socket
import time

import numpy as np
import pytest

from giantsim.analysis import fit_polynomial, savitzky_golay
from giantsim.cli import main
from giantsim.gait import GaitState, advance, apply_command, stance_set
from giantsim.profile import LiftProfile, lift_height
from giantsim.protocol import (Command, UnknownByte, decode, decode_stream,
                               encode, UnknownByteError)
from giantsim.robot import LEG_ORDER, Side
from giantsim.sim import (apply_to_world, export_telemetry, make_world,
                          run_script, support_polygon_contains, tick)
from giantsim.terrain import (Difficulty, LoadConfig, LoadVerdict, Posture,
                              climb_class, load_capacity, load_capacity_kg,
                              max_step_reach, optimal_posture, pebble_class)


@contextlib.contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL: {name}", flush=True)
        raise
    print(f"PASS: {name}", flush=True)


def test_lift_profile_fidelity(profile):
    with criterion("lift-profile fidelity (h(0)=27.66182, peak in [26,29]mm)"):
        profile.heights(np.array([0.0]))  # one-time period derivation + JIT warmup
        start = time.monotonic()
        assert lift_height(profile, 0.0) == 27.66182
        ts = np.linspace(0.0, profile.period, 200_001)
        peak = profile.heights(ts).max()
        assert 26.0 <= peak <= 29.0
        assert time.monotonic() - start < 0.05  # milliseconds-scale work


def test_climb_reach_reproduction(spec, profile, tmp_path):
    with criterion("climb reach 70-90mm; envelope sweep peaks at (0,max,max) in <1s"):
        best_posture = optimal_posture(profile)
        reach = max_step_reach(spec, profile, best_posture)
        assert 70.0 <= reach <= 90.0

        out = str(tmp_path / "envelope.csv")
        start = time.monotonic()
        assert main(["analyze", "--kind", "climb-envelope", "--out", out]) == 0
        assert time.monotonic() - start < 1.0
        rows = np.loadtxt(out, delimiter=",", skiprows=1)
        assert rows.shape[0] >= 10_000
        best = rows[np.argmax(rows[:, 3])]
        assert best[0] == 0.0
        assert best[1] == pytest.approx(profile.peak_height, abs=1e-9)
        assert best[2] == pytest.approx(profile.peak_height, abs=1e-9)
        assert best[3] == pytest.approx(reach, abs=1e-9)


def test_table2_envelopes():
    with criterion("performance table: climb 3/7/9cm, pebbles at 3cm, load anchors"):
        assert climb_class(3.0) is Difficulty.EASY
        assert climb_class(7.0) is Difficulty.DIFFICULT
        assert climb_class(9.0) is Difficulty.IMPOSSIBLE
        assert pebble_class(3.0) is Difficulty.EASY
        assert pebble_class(3.0 + 1e-9) is Difficulty.DIFFICULT
        assert load_capacity_kg(10.0) == 2.5
        assert load_capacity_kg(20.0) == 5.0
        assert load_capacity(LoadConfig(2.5, 10.0)) is LoadVerdict.SUPPORTED
        assert load_capacity(LoadConfig(5.0, 20.0)) is LoadVerdict.SUPPORTED


def test_gait_invariant_suite(gait_cfg, profile):
    name = "gait invariants: stance fraction report, determinism, reversal, drift, turn sign"
    with criterion(name):
        # measured stance fraction over 1e4 instants of steady forward walking
        state = apply_command(GaitState.idle(), gait_cfg, profile, Command.FORWARD)
        dt = profile.period * 7.0 / 1e4 * 143.0  # irrational-ish sampling step
        hits = 0
        n = 10_000
        for _ in range(n):
            state = advance(state, gait_cfg, profile, dt)
            hits += len(stance_set(state, profile)) >= 3
        fraction = hits / n
        print(f"  measured fraction of instants with >=3 stance legs: {fraction:.3f}",
              flush=True)

        # determinism: same inputs, same trajectory
        w1 = apply_to_world(make_world(), Command.FORWARD)
        w2 = apply_to_world(make_world(), Command.FORWARD)
        for _ in range(100):
            w1 = tick(w1, profile.period / 100.0)
            w2 = tick(w2, profile.period / 100.0)
        assert w1.robot.position == w2.robot.position

        # Forward/Backward reversal to 1e-6 mm
        hold = 2.3 * profile.period
        snaps = run_script(make_world(),
                           [(0.0, Command.FORWARD), (hold, Command.BACKWARD)],
                           duration=2 * hold)
        assert abs(snaps[-1].pos[0]) < 1e-6 and abs(snaps[-1].pos[1]) < 1e-6

        # heading drift under Forward < 1e-6 rad per cycle
        w = apply_to_world(make_world(), Command.FORWARD)
        for _ in range(500):
            w = tick(w, profile.period / 100.0)
        assert abs(w.robot.heading) / 5.0 < 1e-6

        # turn-direction sign: left legs reverse against right legs, robot
        # yaws counterclockwise
        turned = apply_to_world(make_world(), Command.LEFT)
        for i, leg in enumerate(LEG_ORDER):
            v = turned.robot.gait.velocities[i]
            assert (v < 0) == (leg.side is Side.LEFT)
        for _ in range(100):
            turned = tick(turned, profile.period / 100.0)
        assert turned.robot.heading > 0.0


def test_protocol_suite():
    with criterion("protocol: bijection, totality, stream splits, service fuzz"):
        # exhaustive bijection over the 26 commands
        assert len({encode(c) for c in Command}) == 26
        for c in Command:
            assert decode(encode(c)) is c
        # totality over all 256 byte values
        mapped = 0
        for byte in range(256):
            try:
                decode(byte)
                mapped += 1
            except UnknownByteError:
                pass
        assert mapped == 26
        # stream concatenation on 1e3 random splits
        rng = np.random.default_rng(99)
        for _ in range(1000):
            n = int(rng.integers(0, 64))
            data = bytes(rng.integers(0, 256, n, dtype=np.uint8))
            k = int(rng.integers(0, n + 1))
            assert decode_stream(data) == decode_stream(data[:k]) + decode_stream(data[k:])

        # 500 random bytes leave a live service healthy
        from giantsim.service import ServiceConfig, SimulatorService
        svc = SimulatorService(ServiceConfig(command_port=0, telemetry_port=0))
        svc.start()
        try:
            payload = bytes(rng.integers(0, 256, 500, dtype=np.uint8))
            expected = sum(isinstance(e, UnknownByte) for e in decode_stream(payload))
            with socket.create_connection(("127.0.0.1", svc.command_port)) as s:
                s.sendall(payload)
            deadline = time.monotonic() + 10.0
            while svc.unknown_byte_count < expected and time.monotonic() < deadline:
                time.sleep(0.01)
            assert svc.unknown_byte_count == expected
            with socket.create_connection(("127.0.0.1", svc.command_port)) as s:
                s.sendall(b"F")  # still accepting commands
                time.sleep(0.1)
            assert str(svc.world.robot.gait.mode) == "Walking(Forward)"
        finally:
            svc.stop()


def test_numerical_oracles(spec, profile, geometry):
    with criterion("numerical oracles: savgol exactness, quartic recovery, stability"):
        # savitzky-golay reproduces degree-<=p polynomials to 1e-9
        ts = np.arange(60, dtype=float)
        for polyorder, window in ((2, 7), (3, 9), (4, 11)):
            coeffs = np.arange(polyorder + 1, dtype=float) + 0.5
            values = ts[:, None] ** np.arange(polyorder + 1) @ coeffs
            got = savitzky_golay(np.column_stack([ts, values]), window, polyorder)
            assert np.allclose(got[:, 1], values, atol=1e-9)

        # quartic coefficient recovery to 1e-6 relative
        ts = np.linspace(0.0, profile.period, 250)
        values = [profile.raw_height(t) for t in ts]
        recovered = fit_polynomial(np.column_stack([ts, values]), 4)
        for got, want in zip(recovered, profile.coefficients):
            assert got == pytest.approx(want, rel=1e-6)

        # stability vs an independent qhull + ray-casting oracle
        scipy_spatial = pytest.importorskip("scipy.spatial")

        def oracle(points, probe=(0.0, 0.0)):
            if len(points) < 3:
                return False
            try:
                hull = scipy_spatial.ConvexHull(points)
            except scipy_spatial.QhullError:
                return False
            verts = points[hull.vertices]
            crossings = 0
            px, py = probe
            for (ax, ay), (bx, by) in zip(verts, np.roll(verts, -1, axis=0)):
                if (ay > py) != (by > py):
                    if ax + (py - ay) * (bx - ax) / (by - ay) > px:
                        crossings += 1
            return crossings % 2 == 1

        rng = np.random.default_rng(101)
        for _ in range(500):
            pts = rng.uniform(-160.0, 160.0, (int(rng.integers(0, 7)), 2))
            assert support_polygon_contains(pts) == oracle(pts)


def test_export_determinism(tmp_path, profile):
    with criterion("byte-identical telemetry across two identical runs"):
        scenario = tmp_path / "scenario.txt"
        scenario.write_text("terrain 300 600 step:7\npose 0 0 0\n")
        script = tmp_path / "script.txt"
        script.write_text(f"0 F\n{5 * profile.period} S\n")
        outs = []
        for name in ("one.jsonl", "two.jsonl"):
            out = tmp_path / name
            assert main(["simulate", "--scenario", str(scenario),
                         "--script", str(script), "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
        assert len(outs[0]) > 10_000


def test_desk_scale_step_scenarios(profile):
    with criterion("simulated 7cm step climbed; 9cm step refused"):
        from giantsim.terrain import TerrainFeature
        T = profile.period

        ok = run_script(make_world(features=[(300.0, 500.0, TerrainFeature.step(7.0))]),
                        [(0.0, Command.FORWARD)], duration=20 * T)
        assert ok[-1].pos[0] > 500.0  # walked up and across the step
        assert any(a.startswith("climb_started(7") for s in ok for a in s.ann)

        no = run_script(make_world(features=[(300.0, 500.0, TerrainFeature.step(9.0))]),
                        [(0.0, Command.FORWARD)], duration=20 * T)
        assert no[-1].pos[0] < 300.0  # held at the wall
        assert any(a.startswith("step_refused(9") for s in no for a in s.ann)
