// @vitest-environment jsdom

import { describe, expect, it } from "vitest";

import { ServiceLink, SocketLike } from "../src/connection";
import { parseSnapshot, TelemetrySnapshot } from "../src/telemetry";
import { SnapshotCoalescer, ViewBox, renderIndicators, renderSideView,
         renderTopDown, worldToCanvas } from "../src/view";

const SAMPLE_LINE = JSON.stringify({
  t: 1.5, pos: [10.0, -20.0], heading: 0.1, pitch: 0.0,
  legs: [
    { id: "LF", phase: 0.0, h: 27.7, stance: false },
    { id: "LM", phase: 14.8, h: 6.2, stance: false },
    { id: "LR", phase: 0.0, h: 27.7, stance: false },
    { id: "RF", phase: 14.8, h: 6.2, stance: false },
    { id: "RM", phase: 0.0, h: 27.7, stance: false },
    { id: "RR", phase: 14.8, h: 6.2, stance: false },
  ],
  mode: "Walking(Forward)", stable: false, terrain: "flat",
  ann: ["not_grounded"],
});

function sample(): TelemetrySnapshot {
  return parseSnapshot(SAMPLE_LINE)!;
}

describe("snapshot parsing", () => {
  it("round-trips a valid record", () => {
    const snap = sample();
    expect(snap.pos).toEqual([10.0, -20.0]);
    expect(snap.legs).toHaveLength(6);
    expect(snap.mode).toBe("Walking(Forward)");
  });

  it("rejects malformed input", () => {
    expect(parseSnapshot("not json")).toBeNull();
    expect(parseSnapshot("{}")).toBeNull();
    expect(parseSnapshot(JSON.stringify({ t: 1 }))).toBeNull();
    const missingLeg = JSON.parse(SAMPLE_LINE);
    missingLeg.legs = missingLeg.legs.slice(0, 5);
    expect(parseSnapshot(JSON.stringify(missingLeg))).toBeNull();
  });
});

describe("projection", () => {
  const view: ViewBox = { width: 400, height: 300, mmPerPixel: 2,
                          centerX: 100, centerY: 50 };

  it("centres the viewbox and flips y", () => {
    expect(worldToCanvas([100, 50], view)).toEqual({ x: 200, y: 150 });
    expect(worldToCanvas([102, 50], view)).toEqual({ x: 201, y: 150 });
    expect(worldToCanvas([100, 52], view)).toEqual({ x: 200, y: 149 });
  });
});

describe("coalescer", () => {
  it("keeps only the newest snapshot under load", () => {
    const c = new SnapshotCoalescer();
    for (let i = 0; i < 100; i += 1) {
      const snap = sample();
      snap.t = i;
      c.push(snap);
    }
    expect(c.take()!.t).toBe(99);
    expect(c.take()).toBeNull();
    expect(c.dropped).toBe(99);
  });
});

function recordingCtx() {
  const calls: string[] = [];
  return {
    calls,
    fillStyle: "", strokeStyle: "", lineWidth: 0,
    fillRect: () => calls.push("fillRect"),
    strokeRect: () => calls.push("strokeRect"),
    beginPath: () => calls.push("beginPath"),
    moveTo: () => calls.push("moveTo"),
    lineTo: () => calls.push("lineTo"),
    arc: () => calls.push("arc"),
    stroke: () => calls.push("stroke"),
    fill: () => calls.push("fill"),
  };
}

describe("renderers", () => {
  const view: ViewBox = { width: 480, height: 360, mmPerPixel: 4,
                          centerX: 0, centerY: 0 };

  it("top-down view draws trail, body and heading arrow", () => {
    const ctx = recordingCtx();
    renderTopDown(ctx, view, [[0, 0], [5, 0], [10, 0]], sample());
    expect(ctx.calls.filter((c) => c === "stroke").length).toBeGreaterThanOrEqual(3);
  });

  it("side view draws six leg bars", () => {
    const ctx = recordingCtx();
    renderSideView(ctx, view, sample());
    expect(ctx.calls.filter((c) => c === "arc")).toHaveLength(6);
  });

  it("indicators reflect the snapshot", () => {
    const make = () => document.createElement("div");
    const el = { mode: make(), stability: make(), terrain: make(),
                 pitch: make(), alarm: make() };
    const snap = sample();
    renderIndicators(el, snap);
    expect(el.mode.textContent).toBe("Walking(Forward)");
    expect(el.stability.textContent).toBe("airborne");
    expect(el.alarm.textContent).toBe("");

    snap.ann = ["toppled"];
    renderIndicators(el, snap);
    expect(el.alarm.textContent).toContain("TOPPLED");
  });
});

describe("service link", () => {
  function fakeSocketFactory() {
    const sockets: Array<SocketLike & { sent: string[]; fireOpen(): void;
                                        fireMessage(data: string): void;
                                        fireClose(): void }> = [];
    const factory = () => {
      const socket = {
        sent: [] as string[],
        onopen: null as (() => void) | null,
        onmessage: null as ((ev: { data: unknown }) => void) | null,
        onclose: null as (() => void) | null,
        onerror: null as (() => void) | null,
        send(data: string) { socket.sent.push(data); },
        close() { socket.onclose?.(); },
        fireOpen() { socket.onopen?.(); },
        fireMessage(data: string) { socket.onmessage?.({ data }); },
        fireClose() { socket.onclose?.(); },
      };
      sockets.push(socket);
      return socket;
    };
    return { factory, sockets };
  }

  it("parses newline-delimited snapshots and drops malformed lines", () => {
    const { factory, sockets } = fakeSocketFactory();
    const link = new ServiceLink({ url: "ws://x", socketFactory: factory });
    const seen: number[] = [];
    const logs: string[] = [];
    link.onSnapshot = (snap) => seen.push(snap.t);
    link.onLog = (line) => logs.push(line);
    link.connect();
    sockets[0]!.fireOpen();
    sockets[0]!.fireMessage(`${SAMPLE_LINE}\ngarbage\n${SAMPLE_LINE}\n`);
    expect(seen).toEqual([1.5, 1.5]);
    expect(logs).toHaveLength(1);
  });

  it("refuses commands while disconnected and reconnects with backoff", async () => {
    const { factory, sockets } = fakeSocketFactory();
    const link = new ServiceLink({ url: "ws://x", socketFactory: factory,
                                   initialBackoffMs: 5, maxBackoffMs: 10 });
    const statuses: string[] = [];
    link.onStatus = (s) => statuses.push(s);
    expect(link.sendCommand("F")).toBe(false);

    link.connect();
    sockets[0]!.fireOpen();
    expect(link.sendCommand("F")).toBe(true);
    expect(sockets[0]!.sent).toEqual(["F"]);
    expect(link.sendCommand("FF")).toBe(false); // single byte only

    sockets[0]!.fireClose();
    expect(link.sendCommand("B")).toBe(false);
    await new Promise((r) => setTimeout(r, 30));
    expect(sockets.length).toBeGreaterThanOrEqual(2); // reconnected
    expect(statuses[0]).toBe("connecting");
    expect(statuses).toContain("connected");
    expect(statuses).toContain("disconnected");
    link.close();
  });
});
