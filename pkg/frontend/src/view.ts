// Rendering: top-down pose with trail and heading arrow, side-elevation
// leg bars, and status indicators.  Pure projection math is kept separate
// so it is testable without a canvas.

import { TelemetrySnapshot } from "./telemetry.js";

export interface ViewBox {
  width: number;
  height: number;
  mmPerPixel: number;
  centerX: number; // world mm at the canvas centre
  centerY: number;
}

export interface Point {
  x: number;
  y: number;
}

/** World (mm, y up) to canvas pixels (y down), centred on the viewbox. */
export function worldToCanvas(pos: [number, number], view: ViewBox): Point {
  return {
    x: view.width / 2 + (pos[0] - view.centerX) / view.mmPerPixel,
    y: view.height / 2 - (pos[1] - view.centerY) / view.mmPerPixel,
  };
}

/** Keeps only the newest snapshot between animation frames. */
export class SnapshotCoalescer {
  private latest: TelemetrySnapshot | null = null;
  private droppedCount = 0;

  push(snap: TelemetrySnapshot): void {
    if (this.latest !== null) this.droppedCount += 1;
    this.latest = snap;
  }

  take(): TelemetrySnapshot | null {
    const snap = this.latest;
    this.latest = null;
    return snap;
  }

  get dropped(): number {
    return this.droppedCount;
  }
}

// Minimal slice of CanvasRenderingContext2D used by the renderers; tests
// substitute a recording stub.
export interface Ctx2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
}

const BODY_LENGTH_MM = 310;
const BODY_WIDTH_MM = 200;

export function renderTopDown(ctx: Ctx2D, view: ViewBox,
                              trail: ReadonlyArray<[number, number]>,
                              snap: TelemetrySnapshot): void {
  ctx.fillStyle = "#10141a";
  ctx.fillRect(0, 0, view.width, view.height);

  if (trail.length > 1) {
    ctx.strokeStyle = "#3b82f6";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    const first = worldToCanvas(trail[0]!, view);
    ctx.moveTo(first.x, first.y);
    for (const pos of trail.slice(1)) {
      const p = worldToCanvas(pos, view);
      ctx.lineTo(p.x, p.y);
    }
    ctx.stroke();
  }

  const centre = worldToCanvas(snap.pos, view);
  const len = BODY_LENGTH_MM / view.mmPerPixel;
  const wid = BODY_WIDTH_MM / view.mmPerPixel;
  const cos = Math.cos(snap.heading);
  const sin = Math.sin(snap.heading);

  // body outline (rotated rectangle)
  ctx.strokeStyle = snap.stable ? "#4ade80" : "#facc15";
  ctx.lineWidth = 2;
  ctx.beginPath();
  const corners: Array<[number, number]> = [
    [len / 2, wid / 2], [len / 2, -wid / 2], [-len / 2, -wid / 2], [-len / 2, wid / 2],
  ];
  corners.forEach(([bx, by], i) => {
    const px = centre.x + (bx * cos - by * sin);
    const py = centre.y - (bx * sin + by * cos);
    if (i === 0) ctx.moveTo(px, py); else ctx.lineTo(px, py);
  });
  ctx.lineTo(centre.x + (corners[0]![0] * cos - corners[0]![1] * sin),
             centre.y - (corners[0]![0] * sin + corners[0]![1] * cos));
  ctx.stroke();

  // heading arrow
  ctx.strokeStyle = "#f87171";
  ctx.beginPath();
  ctx.moveTo(centre.x, centre.y);
  ctx.lineTo(centre.x + cos * len * 0.75, centre.y - sin * len * 0.75);
  ctx.stroke();
}

const LEG_VIEW_MAX_MM = 30;

export function renderSideView(ctx: Ctx2D, view: ViewBox,
                               snap: TelemetrySnapshot): void {
  ctx.fillStyle = "#10141a";
  ctx.fillRect(0, 0, view.width, view.height);
  const ground = view.height - 12;
  ctx.strokeStyle = "#64748b";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(0, ground);
  ctx.lineTo(view.width, ground);
  ctx.stroke();

  const slot = view.width / 6;
  snap.legs.forEach((leg, i) => {
    const x = slot * i + slot / 2;
    const h = Math.min(leg.h, LEG_VIEW_MAX_MM) / LEG_VIEW_MAX_MM;
    const top = ground - h * (view.height - 24);
    ctx.strokeStyle = leg.stance ? "#4ade80" : "#93c5fd";
    ctx.lineWidth = 6;
    ctx.beginPath();
    ctx.moveTo(x, ground);
    ctx.lineTo(x, top);
    ctx.stroke();
    ctx.fillStyle = leg.stance ? "#4ade80" : "#93c5fd";
    ctx.beginPath();
    ctx.arc(x, top, 4, 0, 2 * Math.PI);
    ctx.fill();
  });
}

export interface IndicatorElements {
  mode: HTMLElement;
  stability: HTMLElement;
  terrain: HTMLElement;
  pitch: HTMLElement;
  alarm: HTMLElement;
}

export function renderIndicators(el: IndicatorElements, snap: TelemetrySnapshot): void {
  el.mode.textContent = snap.mode;
  el.terrain.textContent = snap.terrain;
  el.pitch.textContent = `${((snap.pitch * 180) / Math.PI).toFixed(1)}°`;
  if (snap.stable) {
    el.stability.textContent = "stable";
    el.stability.className = "good";
  } else if (snap.ann.includes("not_grounded")) {
    el.stability.textContent = "airborne";
    el.stability.className = "warn";
  } else {
    el.stability.textContent = "unstable";
    el.stability.className = "warn";
  }
  const toppled = snap.ann.includes("toppled");
  el.alarm.textContent = toppled ? "TOPPLED — send reset" : "";
  el.alarm.className = toppled ? "alarm" : "";
}
