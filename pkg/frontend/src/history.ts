import type { ApiClient } from "./api.js";
import type { MembershipVerdict, SessionState, ZeroPart } from "./types.js";

/**
 * Session controller: the single source of truth is whatever the
 * service last returned.  The client never mutates quiver data
 * locally, and at most one mutation request is in flight per session
 * (later clicks queue behind it).
 */

export interface ControllerSnapshot {
  session: SessionState;
  verdict: MembershipVerdict | null;
  zeroPart: ZeroPart | null;
  busy: boolean;
  notice: string | null;
}

type Listener = (snapshot: ControllerSnapshot) => void;

export class SessionController {
  private session: SessionState;
  private verdict: MembershipVerdict | null = null;
  private zeroPart: ZeroPart | null = null;
  private overlayEnabled = false;
  private notice: string | null = null;
  private queue: Promise<void> = Promise.resolve();
  private pending = 0;
  private listeners: Listener[] = [];

  constructor(
    private readonly api: ApiClient,
    session: SessionState,
  ) {
    this.session = session;
  }

  static async create(api: ApiClient, quiver: SessionState["quiver"]) {
    const session = await api.createSession(quiver);
    const controller = new SessionController(api, session);
    await controller.refreshVerdict();
    return controller;
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.snapshot());
  }

  snapshot(): ControllerSnapshot {
    return {
      session: this.session,
      verdict: this.verdict,
      zeroPart: this.overlayEnabled ? this.zeroPart : null,
      busy: this.pending > 0,
      notice: this.notice,
    };
  }

  get state(): SessionState {
    return this.session;
  }

  /** Queue a service call; 4xx responses surface as inline notices. */
  private enqueue(work: () => Promise<void>): Promise<void> {
    this.pending += 1;
    this.emit();
    const run = this.queue.then(work).catch((error: unknown) => {
      this.notice = error instanceof Error ? error.message : String(error);
    });
    this.queue = run.then(() => {
      this.pending -= 1;
      this.emit();
    });
    return this.queue;
  }

  mutate(vertex: number, power: number): Promise<void> {
    return this.enqueue(async () => {
      this.notice = null;
      this.session = await this.api.mutate(this.session.id, vertex, power);
      await this.refreshAfterChange();
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      this.notice = null;
      this.session = await this.api.undo(this.session.id);
      await this.refreshAfterChange();
    });
  }

  setOverlay(enabled: boolean): Promise<void> {
    return this.enqueue(async () => {
      this.overlayEnabled = enabled;
      if (enabled) await this.refreshZeroPart();
    });
  }

  private async refreshAfterChange(): Promise<void> {
    await this.refreshVerdict();
    if (this.overlayEnabled) await this.refreshZeroPart();
  }

  private async refreshVerdict(): Promise<void> {
    this.verdict = await this.api.classify(this.session.id);
  }

  private async refreshZeroPart(): Promise<void> {
    try {
      this.zeroPart = await this.api.zeroPart(this.session.id);
    } catch (error) {
      // 409 for non-members: show the notice, drop the overlay
      this.zeroPart = null;
      this.notice =
        error instanceof Error ? `zero part unavailable: ${error.message}` : String(error);
    }
  }

  private emit(): void {
    const snap = this.snapshot();
    for (const listener of this.listeners) listener(snap);
  }
}
