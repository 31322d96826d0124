// Generated copy of `giantsim protocol-table` (wire protocol v1).
// Do not edit by hand: tests/wire-table.test.ts diffs it against the CLI
// output, so a mismatch fails the build.

export const WIRE_VERSION = 1;

export const WIRE_TABLE = {
  F: "FORWARD",
  B: "BACKWARD",
  L: "LEFT",
  R: "RIGHT",
  G: "FORWARD_LEFT",
  H: "FORWARD_RIGHT",
  I: "BACKWARD_LEFT",
  J: "BACKWARD_RIGHT",
  "1": "PAIR_FRONT",
  "2": "PAIR_MIDDLE",
  "3": "PAIR_REAR",
  a: "LF_UP",
  b: "LF_DOWN",
  c: "LM_UP",
  d: "LM_DOWN",
  e: "LR_UP",
  f: "LR_DOWN",
  g: "RF_UP",
  h: "RF_DOWN",
  i: "RM_UP",
  j: "RM_DOWN",
  k: "RR_UP",
  l: "RR_DOWN",
  P: "PRIME_SET_A",
  Q: "PRIME_SET_B",
  S: "STOP",
} as const;

export type WireByte = keyof typeof WIRE_TABLE;
export type CommandName = (typeof WIRE_TABLE)[WireByte];

export const ALL_BYTES = Object.keys(WIRE_TABLE) as WireByte[];
