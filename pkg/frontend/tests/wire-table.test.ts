// The committed wire table must match the service CLI byte for byte;
// a mismatch is a build(test)-time error.

import { execFileSync } from "node:child_process";
import { fileURLToPath } from "node:url";
import { dirname, resolve } from "node:path";
import { describe, expect, it } from "vitest";

import { ALL_BYTES, WIRE_TABLE, WIRE_VERSION } from "../src/wire-table";

const REPO_ROOT = resolve(dirname(fileURLToPath(import.meta.url)), "../..");

function cliTable(): Record<string, string> {
  let stdout = "";
  for (const python of ["python3", "python"]) {
    try {
      stdout = execFileSync(python, ["-m", "giantsim.cli", "protocol-table"],
                            { cwd: REPO_ROOT, encoding: "utf8" });
      break;
    } catch {
      continue;
    }
  }
  if (stdout === "") {
    throw new Error("could not run `giantsim protocol-table`; install the python package");
  }
  const table: Record<string, string> = {};
  for (const line of stdout.trim().split("\n")) {
    const [byte, name] = line.split("\t");
    table[byte!] = name!;
  }
  return table;
}

describe("generated wire table", () => {
  it("matches the service CLI output exactly", () => {
    expect({ ...WIRE_TABLE }).toEqual(cliTable());
  });

  it("has 26 distinct single-byte entries", () => {
    expect(ALL_BYTES).toHaveLength(26);
    expect(new Set(ALL_BYTES).size).toBe(26);
    for (const byte of ALL_BYTES) expect(byte).toHaveLength(1);
    expect(WIRE_VERSION).toBe(1);
  });
});
