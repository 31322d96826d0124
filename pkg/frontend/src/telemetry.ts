// Telemetry record parsing: the UI renders only what it received.

export interface LegTelemetry {
  id: string;
  phase: number;
  h: number;
  stance: boolean;
}

export interface TelemetrySnapshot {
  t: number;
  pos: [number, number];
  heading: number;
  pitch: number;
  legs: LegTelemetry[];
  mode: string;
  stable: boolean;
  terrain: string;
  ann: string[];
}

function isNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

/** Strictly validate one NDJSON line; malformed input yields null. */
export function parseSnapshot(line: string): TelemetrySnapshot | null {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null) return null;
  const rec = raw as Record<string, unknown>;
  if (!isNumber(rec.t) || !isNumber(rec.heading) || !isNumber(rec.pitch)) return null;
  if (typeof rec.mode !== "string" || typeof rec.terrain !== "string") return null;
  if (typeof rec.stable !== "boolean") return null;
  if (!Array.isArray(rec.pos) || rec.pos.length !== 2 || !rec.pos.every(isNumber)) return null;
  if (!Array.isArray(rec.ann) || !rec.ann.every((a) => typeof a === "string")) return null;
  if (!Array.isArray(rec.legs) || rec.legs.length !== 6) return null;
  const legs: LegTelemetry[] = [];
  for (const item of rec.legs) {
    const leg = item as Record<string, unknown>;
    if (typeof leg.id !== "string" || !isNumber(leg.phase) || !isNumber(leg.h)
        || typeof leg.stance !== "boolean") {
      return null;
    }
    legs.push({ id: leg.id, phase: leg.phase, h: leg.h, stance: leg.stance });
  }
  return {
    t: rec.t,
    pos: [rec.pos[0] as number, rec.pos[1] as number],
    heading: rec.heading,
    pitch: rec.pitch,
    legs,
    mode: rec.mode,
    stable: rec.stable,
    terrain: rec.terrain,
    ann: rec.ann as string[],
  };
}
