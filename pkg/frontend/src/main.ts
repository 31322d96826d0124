// Entry point: wires the panel, the telemetry link and the live views.
// Service location comes from ?host=...&telemetry=... query parameters,
// editable in the settings pane.

import { ServiceLink } from "./connection.js";
import { buildPanel } from "./panel.js";
import { TelemetrySnapshot } from "./telemetry.js";
import { Ctx2D, SnapshotCoalescer, ViewBox, renderIndicators, renderSideView,
         renderTopDown } from "./view.js";

const TRAIL_LIMIT = 2000;

function query(name: string, fallback: string): string {
  return new URLSearchParams(window.location.search).get(name) ?? fallback;
}

function element(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing #${id}`);
  return el;
}

function main(): void {
  const host = query("host", "127.0.0.1");
  const port = query("telemetry", "7061");
  (element("host") as HTMLInputElement).value = host;
  (element("port") as HTMLInputElement).value = port;
  element("connect-btn").addEventListener("click", () => {
    const h = (element("host") as HTMLInputElement).value;
    const p = (element("port") as HTMLInputElement).value;
    window.location.search = `?host=${encodeURIComponent(h)}&telemetry=${encodeURIComponent(p)}`;
  });

  const statusEl = element("status");
  const logEl = element("log");
  const log = (line: string) => {
    const item = document.createElement("div");
    item.textContent = line;
    logEl.prepend(item);
    while (logEl.childElementCount > 50) logEl.lastElementChild?.remove();
  };

  const link = new ServiceLink({ url: `ws://${host}:${port}/` });
  link.onStatus = (status) => {
    statusEl.textContent = status;
    statusEl.className = `status-${status}`;
  };
  link.onLog = log;

  const panel = buildPanel(document, link);
  element("panel-slot").appendChild(panel.root);
  element("reset-btn").addEventListener("click", () => link.sendReset());

  const topCanvas = element("topdown") as HTMLCanvasElement;
  const sideCanvas = element("sideview") as HTMLCanvasElement;
  const indicators = {
    mode: element("mode"),
    stability: element("stability"),
    terrain: element("terrain"),
    pitch: element("pitch"),
    alarm: element("alarm"),
  };

  const coalescer = new SnapshotCoalescer();
  const trail: Array<[number, number]> = [];
  const seenAnn = new Set<string>();

  link.onSnapshot = (snap: TelemetrySnapshot) => {
    coalescer.push(snap);
    for (const ann of snap.ann) {
      if (ann === "not_grounded") continue; // too chatty for the event log
      const key = `${ann}`;
      if (!seenAnn.has(key)) {
        seenAnn.add(key);
        log(`[t=${snap.t.toFixed(1)}] ${ann}`);
      }
    }
  };

  const topView: ViewBox = { width: topCanvas.width, height: topCanvas.height,
                             mmPerPixel: 4, centerX: 0, centerY: 0 };
  const sideView: ViewBox = { width: sideCanvas.width, height: sideCanvas.height,
                              mmPerPixel: 1, centerX: 0, centerY: 0 };

  const frame = () => {
    const snap = coalescer.take(); // coalesce to the display refresh rate
    if (snap !== null) {
      trail.push([snap.pos[0], snap.pos[1]]);
      if (trail.length > TRAIL_LIMIT) trail.shift();
      topView.centerX = snap.pos[0];
      topView.centerY = snap.pos[1];
      const top = topCanvas.getContext("2d");
      if (top !== null) renderTopDown(top as unknown as Ctx2D, topView, trail, snap);
      const side = sideCanvas.getContext("2d");
      if (side !== null) renderSideView(side as unknown as Ctx2D, sideView, snap);
      renderIndicators(indicators, snap);
    }
    window.requestAnimationFrame(frame);
  };

  link.connect();
  window.requestAnimationFrame(frame);
}

main();
