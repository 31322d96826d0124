// Control panel DOM: 8-way pad (hold-to-walk), pair buttons, per-leg jog
// pairs, red/green priming buttons and Stop.  Exactly one wire byte per
// press; directional releases send Stop.

import { ButtonSpec, DIRECTIONAL_PAD, JOG_COLUMNS, PAIR_BUTTONS,
         PRIME_BUTTONS, commandName } from "./protocol.js";
import { WireByte } from "./wire-table.js";

export interface CommandSender {
  sendCommand(byte: string): boolean;
}

export interface PanelHandle {
  root: HTMLElement;
  buttons: Map<WireByte, HTMLButtonElement>;
  /** presses attempted while disconnected (dropped, never queued) */
  droppedCount(): number;
}

export function buildPanel(doc: Document, link: CommandSender): PanelHandle {
  const root = doc.createElement("div");
  root.className = "panel";
  const buttons = new Map<WireByte, HTMLButtonElement>();
  let dropped = 0;

  const send = (byte: WireByte) => {
    if (!link.sendCommand(byte)) dropped += 1;
  };

  const makeButton = (spec: ButtonSpec): HTMLButtonElement => {
    const btn = doc.createElement("button");
    btn.textContent = spec.label;
    btn.dataset.byte = spec.byte;
    btn.dataset.command = commandName(spec.byte);
    btn.setAttribute("aria-label", commandName(spec.byte));
    if (spec.holdToWalk) {
      let held = false;
      btn.addEventListener("pointerdown", () => {
        held = true;
        send(spec.byte);
      });
      const release = () => {
        if (held) {
          held = false;
          send("S");
        }
      };
      btn.addEventListener("pointerup", release);
      btn.addEventListener("pointerleave", release);
      btn.addEventListener("pointercancel", release);
    } else {
      btn.addEventListener("click", () => send(spec.byte));
    }
    buttons.set(spec.byte, btn);
    return btn;
  };

  const pad = doc.createElement("div");
  pad.className = "dirpad";
  for (const spec of DIRECTIONAL_PAD) pad.appendChild(makeButton(spec));
  root.appendChild(pad);

  const pairs = doc.createElement("div");
  pairs.className = "pairs";
  for (const spec of PAIR_BUTTONS) pairs.appendChild(makeButton(spec));
  root.appendChild(pairs);

  const primes = doc.createElement("div");
  primes.className = "primes";
  for (const spec of PRIME_BUTTONS) {
    const btn = makeButton(spec);
    btn.classList.add(`prime-${spec.color}`);
    primes.appendChild(btn);
  }
  root.appendChild(primes);

  const jogs = doc.createElement("div");
  jogs.className = "jogs";
  for (const column of JOG_COLUMNS) {
    const col = doc.createElement("div");
    col.className = "jog-column";
    const title = doc.createElement("span");
    title.textContent = column.leg;
    col.appendChild(title);
    col.appendChild(makeButton({ byte: column.up, label: "▲", holdToWalk: false }));
    col.appendChild(makeButton({ byte: column.down, label: "▼", holdToWalk: false }));
    jogs.appendChild(col);
  }
  root.appendChild(jogs);

  return { root, buttons, droppedCount: () => dropped };
}
