// @vitest-environment jsdom

import { createServer, Server, Socket } from "node:net";
import { describe, expect, it } from "vitest";

import { buildPanel } from "../src/panel";
import { ALL_BYTES } from "../src/wire-table";

function recordingLink(connected = true) {
  const sent: string[] = [];
  return {
    sent,
    sendCommand(byte: string): boolean {
      if (!connected) return false;
      sent.push(byte);
      return true;
    },
  };
}

function press(btn: HTMLButtonElement): void {
  btn.dispatchEvent(new window.Event("pointerdown"));
  btn.dispatchEvent(new window.Event("pointerup"));
}

describe("panel layout", () => {
  it("covers all 26 commands with one button each", () => {
    const link = recordingLink();
    const panel = buildPanel(document, link);
    expect(panel.buttons.size).toBe(26);
    expect([...panel.buttons.keys()].sort()).toEqual([...ALL_BYTES].sort());
    for (const [byte, btn] of panel.buttons) {
      expect(btn.dataset.byte).toBe(byte);
    }
  });

  it("every button press reaches the wire with its own byte", () => {
    const link = recordingLink();
    const panel = buildPanel(document, link);
    for (const btn of panel.buttons.values()) {
      if (btn.dataset.command === "STOP" || !isDirectional(btn)) {
        btn.click();
      } else {
        press(btn);
      }
    }
    expect(new Set(link.sent)).toEqual(new Set(ALL_BYTES));
  });
});

function isDirectional(btn: HTMLButtonElement): boolean {
  const name = btn.dataset.command ?? "";
  return ["FORWARD", "BACKWARD", "LEFT", "RIGHT", "FORWARD_LEFT", "FORWARD_RIGHT",
          "BACKWARD_LEFT", "BACKWARD_RIGHT"].includes(name);
}

describe("hold-to-walk", () => {
  it("press sends the byte once, release sends Stop", () => {
    const link = recordingLink();
    const panel = buildPanel(document, link);
    const forward = panel.buttons.get("F")!;
    forward.dispatchEvent(new window.Event("pointerdown"));
    expect(link.sent).toEqual(["F"]);
    forward.dispatchEvent(new window.Event("pointerup"));
    expect(link.sent).toEqual(["F", "S"]);
  });

  it("pointer leaving the button also stops, without double-sending", () => {
    const link = recordingLink();
    const panel = buildPanel(document, link);
    const back = panel.buttons.get("B")!;
    back.dispatchEvent(new window.Event("pointerdown"));
    back.dispatchEvent(new window.Event("pointerleave"));
    back.dispatchEvent(new window.Event("pointerup")); // already released
    expect(link.sent).toEqual(["B", "S"]);
  });

  it("pair, jog and prime buttons send no release byte", () => {
    const link = recordingLink();
    const panel = buildPanel(document, link);
    for (const byte of ["2", "a", "P"] as const) {
      const btn = panel.buttons.get(byte)!;
      btn.click();
      btn.dispatchEvent(new window.Event("pointerup"));
    }
    expect(link.sent).toEqual(["2", "a", "P"]);
  });
});

describe("disconnected behaviour", () => {
  it("drops presses without queueing", () => {
    const link = recordingLink(false);
    const panel = buildPanel(document, link);
    press(panel.buttons.get("F")!);
    panel.buttons.get("2")!.click();
    expect(link.sent).toEqual([]);
    expect(panel.droppedCount()).toBe(3); // F, release-S and 2 all dropped
  });
});

describe("server-side capture", () => {
  it("pressing every button once yields 26 distinct bytes at the server", async () => {
    const received: string[] = [];
    const server: Server = createServer((sock: Socket) => {
      sock.on("data", (chunk) => received.push(...chunk.toString("ascii")));
    });
    await new Promise<void>((done) => server.listen(0, "127.0.0.1", done));
    const port = (server.address() as { port: number }).port;

    const socket = await new Promise<Socket>((done, fail) => {
      const s = new Socket();
      s.connect(port, "127.0.0.1", () => done(s));
      s.on("error", fail);
    });
    const link = {
      sendCommand(byte: string): boolean {
        socket.write(byte);
        return true;
      },
    };

    const panel = buildPanel(document, link);
    for (const btn of panel.buttons.values()) {
      if (btn.dataset.command === "STOP" || !isDirectional(btn)) {
        btn.click();
      } else {
        press(btn);
      }
    }
    await new Promise((r) => setTimeout(r, 200));
    socket.end();
    await new Promise<void>((done) => server.close(() => done()));

    const distinct = new Set(received);
    expect(distinct.size).toBe(26);
    expect([...distinct].sort()).toEqual([...ALL_BYTES].sort());
  });
});
