// Panel-facing grouping of the wire table.

import { WIRE_TABLE, WireByte } from "./wire-table.js";

export interface ButtonSpec {
  byte: WireByte;
  label: string;
  /** directional buttons are hold-to-walk: release sends Stop */
  holdToWalk: boolean;
}

/** 3x3 directional pad, row-major; centre is the Stop control. */
export const DIRECTIONAL_PAD: ReadonlyArray<ButtonSpec> = [
  { byte: "G", label: "↖", holdToWalk: true },
  { byte: "F", label: "↑", holdToWalk: true },
  { byte: "H", label: "↗", holdToWalk: true },
  { byte: "L", label: "↺", holdToWalk: true },
  { byte: "S", label: "■", holdToWalk: false },
  { byte: "R", label: "↻", holdToWalk: true },
  { byte: "I", label: "↙", holdToWalk: true },
  { byte: "B", label: "↓", holdToWalk: true },
  { byte: "J", label: "↘", holdToWalk: true },
];

export const PAIR_BUTTONS: ReadonlyArray<ButtonSpec> = [
  { byte: "1", label: "1", holdToWalk: false },
  { byte: "2", label: "2", holdToWalk: false },
  { byte: "3", label: "3", holdToWalk: false },
];

export const PRIME_BUTTONS: ReadonlyArray<ButtonSpec & { color: string }> = [
  { byte: "P", label: "prime A", holdToWalk: false, color: "red" },
  { byte: "Q", label: "prime B", holdToWalk: false, color: "green" },
];

/** Six legs in telemetry order, each with an up/down jog byte pair. */
export const JOG_COLUMNS: ReadonlyArray<{ leg: string; up: WireByte; down: WireByte }> = [
  { leg: "LF", up: "a", down: "b" },
  { leg: "LM", up: "c", down: "d" },
  { leg: "LR", up: "e", down: "f" },
  { leg: "RF", up: "g", down: "h" },
  { leg: "RM", up: "i", down: "j" },
  { leg: "RR", up: "k", down: "l" },
];

export function commandName(byte: WireByte): string {
  return WIRE_TABLE[byte];
}
