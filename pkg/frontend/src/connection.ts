// Websocket link to the service: inbound newline-delimited snapshots,
// outbound single-character command messages.  Reconnects with capped
// backoff; commands are dropped (never queued) while disconnected.

import { parseSnapshot, TelemetrySnapshot } from "./telemetry.js";

export type LinkStatus = "connecting" | "connected" | "disconnected";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export interface ServiceLinkOptions {
  url: string;
  socketFactory?: (url: string) => SocketLike;
  initialBackoffMs?: number;
  maxBackoffMs?: number;
}

export class ServiceLink {
  onSnapshot: ((snap: TelemetrySnapshot) => void) | null = null;
  onStatus: ((status: LinkStatus) => void) | null = null;
  onLog: ((line: string) => void) | null = null;

  private socket: SocketLike | null = null;
  private status: LinkStatus = "disconnected";
  private backoffMs: number;
  private closed = false;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(private readonly opts: ServiceLinkOptions) {
    this.backoffMs = opts.initialBackoffMs ?? 500;
  }

  get currentStatus(): LinkStatus {
    return this.status;
  }

  connect(): void {
    if (this.closed) return;
    const factory = this.opts.socketFactory
      ?? ((url: string) => new WebSocket(url) as unknown as SocketLike);
    this.setStatus("connecting");
    let socket: SocketLike;
    try {
      socket = factory(this.opts.url);
    } catch {
      this.scheduleReconnect();
      return;
    }
    this.socket = socket;
    socket.onopen = () => {
      this.backoffMs = this.opts.initialBackoffMs ?? 500;
      this.setStatus("connected");
    };
    socket.onmessage = (ev) => this.handleMessage(String(ev.data));
    socket.onerror = () => undefined;
    socket.onclose = () => {
      this.socket = null;
      this.setStatus("disconnected");
      this.scheduleReconnect();
    };
  }

  /** One byte per press; returns false (and drops) when not connected. */
  sendCommand(byte: string): boolean {
    if (this.status !== "connected" || this.socket === null || byte.length !== 1) {
      return false;
    }
    try {
      this.socket.send(byte);
      return true;
    } catch {
      return false;
    }
  }

  sendReset(): boolean {
    if (this.status !== "connected" || this.socket === null) return false;
    this.socket.send("reset");
    return true;
  }

  close(): void {
    this.closed = true;
    if (this.timer !== null) clearTimeout(this.timer);
    this.socket?.close();
    this.socket = null;
    this.setStatus("disconnected");
  }

  private handleMessage(data: string): void {
    for (const line of data.split("\n")) {
      if (!line.trim()) continue;
      const snap = parseSnapshot(line);
      if (snap === null) {
        this.onLog?.(`malformed snapshot dropped (${line.length} bytes)`);
        continue; // view stays unchanged
      }
      this.onSnapshot?.(snap);
    }
  }

  private scheduleReconnect(): void {
    if (this.closed) return;
    const delay = this.backoffMs;
    this.backoffMs = Math.min(this.backoffMs * 2, this.opts.maxBackoffMs ?? 5000);
    this.timer = setTimeout(() => this.connect(), delay);
  }

  private setStatus(status: LinkStatus): void {
    if (status !== this.status) {
      this.status = status;
      this.onStatus?.(status);
    }
  }
}
