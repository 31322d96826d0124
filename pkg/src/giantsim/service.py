"""Long-running teleop service.

Two listening sockets:
  * command port  — raw TCP; every received byte is one wire command.
  * telemetry port — websocket (HTTP upgrade); each simulator tick is
    broadcast as one newline-terminated JSON record.  Clients may send
    single-character text messages which are decoded exactly like command
    bytes (this is how a browser panel drives the robot), or the literal
    text "reset" to clear a toppled latch.

One tick thread owns the world; connection readers only enqueue commands.
Slow telemetry subscribers are dropped-oldest at a queue depth of 256.
"""

import errno
import logging
import math
import queue
import socket
import threading
import time
from dataclasses import dataclass, replace
from typing import Union

from websockets.exceptions import ConnectionClosed
from websockets.sync.server import serve as ws_serve

from . import sim
from .protocol import decode_stream, Command, UnknownByte
from .scenario import parse_scenario
from .sim import World, make_world

logger = logging.getLogger(__name__)

_QUEUE_DEPTH = 256
_RESET = object()


class PortInUseError(OSError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    command_port: int = 7060
    telemetry_port: int = 7061
    tick_rate: float = 100.0          # service ticks per second
    seconds_per_cycle: float = 1.2    # wall-clock pace of one gait cycle
    scenario_path: Union[str, None] = None

    def __post_init__(self):
        # port 0 asks the OS for an ephemeral port, so it may repeat
        if self.command_port == self.telemetry_port and self.command_port != 0:
            raise ValueError("command and telemetry ports must differ")
        if not 10.0 <= self.tick_rate <= 1000.0:
            raise ValueError("tick rate must lie in [10, 1000] Hz")


class SimulatorService:
    def __init__(self, cfg: ServiceConfig, world: Union[World, None] = None):
        self.cfg = cfg
        if world is None:
            if cfg.scenario_path is not None:
                with open(cfg.scenario_path) as f:
                    world = parse_scenario(f.read())
            else:
                world = make_world()
        self.world = world
        self._commands: queue.Queue = queue.Queue()
        self._subscribers: list[queue.Queue] = []
        self._subscribers_lock = threading.Lock()
        self._unknown_bytes = 0
        self._reported_unknown = 0
        self._running = False
        self._threads: list[threading.Thread] = []
        self._command_sock: Union[socket.socket, None] = None
        self._ws_server = None
        self.command_port = cfg.command_port
        self.telemetry_port = cfg.telemetry_port

    # -- lifecycle ---------------------------------------------------------

    def start(self) -> None:
        self._running = True
        try:
            self._command_sock = socket.create_server(
                (self.cfg.host, self.cfg.command_port), reuse_port=False)
        except OSError as exc:
            if exc.errno == errno.EADDRINUSE:
                raise PortInUseError(f"command port {self.cfg.command_port} in use") from exc
            raise
        self.command_port = self._command_sock.getsockname()[1]
        self._command_sock.settimeout(0.2)

        try:
            self._ws_server = ws_serve(self._telemetry_handler, self.cfg.host,
                                       self.cfg.telemetry_port)
        except OSError as exc:
            self._command_sock.close()
            if exc.errno == errno.EADDRINUSE:
                raise PortInUseError(f"telemetry port {self.cfg.telemetry_port} in use") from exc
            raise
        self.telemetry_port = self._ws_server.socket.getsockname()[1]

        for target in (self._accept_loop, self._ws_server.serve_forever, self._tick_loop):
            thread = threading.Thread(target=target, daemon=True)
            thread.start()
            self._threads.append(thread)
        logger.info("service up: command=%d telemetry=%d", self.command_port,
                    self.telemetry_port)

    def stop(self) -> None:
        """Graceful shutdown: stops ticking, flushes telemetry queues, closes."""
        if not self._running:
            return
        self._running = False
        with self._subscribers_lock:
            for q in self._subscribers:
                q.put(None)
        if self._ws_server is not None:
            self._ws_server.shutdown()
        if self._command_sock is not None:
            self._command_sock.close()
        for thread in self._threads:
            thread.join(timeout=5.0)

    # -- command ingestion ---------------------------------------------------

    def _ingest(self, data: bytes) -> None:
        for event in decode_stream(data):
            if isinstance(event, UnknownByte):
                self._unknown_bytes += 1
            else:
                self._commands.put(event)

    def _accept_loop(self) -> None:
        while self._running:
            try:
                conn, _ = self._command_sock.accept()
            except socket.timeout:
                continue
            except OSError:
                break
            thread = threading.Thread(target=self._command_reader, args=(conn,),
                                      daemon=True)
            thread.start()

    def _command_reader(self, conn: socket.socket) -> None:
        with conn:
            conn.settimeout(0.2)
            while self._running:
                try:
                    data = conn.recv(4096)
                except socket.timeout:
                    continue
                except OSError:
                    break
                if not data:
                    break
                self._ingest(data)

    # -- telemetry fan-out ----------------------------------------------------

    def _telemetry_handler(self, connection) -> None:
        q: queue.Queue = queue.Queue(maxsize=_QUEUE_DEPTH)
        with self._subscribers_lock:
            self._subscribers.append(q)
        sender = threading.Thread(target=self._pump, args=(connection, q), daemon=True)
        sender.start()
        try:
            for message in connection:
                if isinstance(message, bytes):
                    message = message.decode("ascii", errors="replace")
                text = message.strip("\r\n")
                if text == "reset":
                    self._commands.put(_RESET)
                elif len(text) == 1:
                    self._ingest(text.encode("ascii", errors="replace"))
                elif text:
                    self._unknown_bytes += 1
        except ConnectionClosed:
            pass
        finally:
            with self._subscribers_lock:
                if q in self._subscribers:
                    self._subscribers.remove(q)
            q.put(None)
            sender.join(timeout=5.0)

    @staticmethod
    def _pump(connection, q: queue.Queue) -> None:
        while True:
            item = q.get()
            if item is None:
                return
            try:
                connection.send(item)
            except ConnectionClosed:
                return

    def _broadcast(self, line: str) -> None:
        with self._subscribers_lock:
            for q in self._subscribers:
                while True:
                    try:
                        q.put_nowait(line)
                        break
                    except queue.Full:
                        try:
                            q.get_nowait()  # drop-oldest for slow subscribers
                        except queue.Empty:
                            pass

    # -- simulation ------------------------------------------------------------

    def _tick_loop(self) -> None:
        period = self.world.profile.period
        dt_tick = period / (self.cfg.seconds_per_cycle * self.cfg.tick_rate)
        substeps = max(1, math.ceil(dt_tick / (period / 100.0)))
        sub_dt = dt_tick / substeps
        tick_seconds = 1.0 / self.cfg.tick_rate

        deadline = time.monotonic()
        while self._running:
            while True:
                try:
                    cmd = self._commands.get_nowait()
                except queue.Empty:
                    break
                if cmd is _RESET:
                    self.world = sim.reset_world(self.world)
                else:
                    self.world = sim.apply_to_world(self.world, cmd)
            try:
                for _ in range(substeps):
                    self.world = sim.tick(self.world, sub_dt)
            except Exception:
                logger.exception("tick failed; world frozen")
            snap = sim.snapshot(self.world)
            self.world = sim.drain_events(self.world)
            if self._unknown_bytes != self._reported_unknown:
                self._reported_unknown = self._unknown_bytes
                snap = replace(snap, ann=snap.ann + (f"unknown_bytes:{self._reported_unknown}",))
            self._broadcast(snap.to_json_line() + "\n")

            deadline += tick_seconds
            delay = deadline - time.monotonic()
            if delay > 0:
                time.sleep(delay)
            else:
                deadline = time.monotonic()  # fell behind; don't burst

    @property
    def unknown_byte_count(self) -> int:
        return self._unknown_bytes
