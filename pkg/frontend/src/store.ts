import { SessionClient } from "./api.js";
import type { SessionState } from "./types.js";

export interface Positions {
  [vertexId: number]: { x: number; y: number };
}

/**
 * The view store: a pure projection of the last confirmed service response.
 *
 * No mutation math happens client-side. At most one mutation request is in
 * flight per session; responses arriving out of order are discarded by
 * sequence number, so the displayed state always equals some confirmed
 * service reply (the latest one issued).
 */
export class SessionStore {
  private seq = 0;
  private appliedSeq = -1;
  private busy = false;
  state: SessionState | null = null;
  positions: Positions = {};
  lastError: string | null = null;
  private listeners: Array<() => void> = [];

  constructor(private client: SessionClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  get inFlight(): boolean {
    return this.busy;
  }

  displayedCluster(): string[] {
    return this.state ? [...this.state.cluster] : [];
  }

  displayedWord(): number[] {
    return this.state ? [...this.state.word] : [];
  }

  /** Accept a confirmed server response; stale responses are dropped. */
  private apply(seq: number, state: SessionState): void {
    if (seq <= this.appliedSeq) {
      return; // stale: a newer response has already been rendered
    }
    this.appliedSeq = seq;
    this.state = state;
    this.emit();
  }

  private async run(action: () => Promise<SessionState>): Promise<boolean> {
    if (this.busy) {
      return false; // single in-flight mutation per session
    }
    const seq = ++this.seq;
    this.busy = true;
    try {
      const state = await action();
      this.apply(seq, state);
      this.lastError = null;
      return true;
    } catch (err) {
      this.lastError = err instanceof Error ? err.message : String(err);
      this.emit();
      return false;
    } finally {
      this.busy = false;
    }
  }

  async openPreset(preset: string): Promise<boolean> {
    const ok = await this.run(() => this.client.createFromPreset(preset));
    if (ok) {
      this.positions = {};
    }
    return ok;
  }

  async mutate(k: number): Promise<boolean> {
    const id = this.state?.id;
    if (!id) return false;
    return this.run(() => this.client.mutate(id, k));
  }

  async undo(): Promise<boolean> {
    const id = this.state?.id;
    if (!id) return false;
    return this.run(() => this.client.undo(id));
  }

  async redo(): Promise<boolean> {
    const id = this.state?.id;
    if (!id) return false;
    return this.run(() => this.client.redo(id));
  }

  /** Jump to a history step by undoing/redoing through the service. */
  async jumpToStep(step: number): Promise<boolean> {
    if (!this.state) return false;
    const current = this.state.word.length;
    if (step === current) return true;
    const moves = step < current ? current - step : step - current;
    const go = step < current ? () => this.undo() : () => this.redo();
    for (let i = 0; i < moves; i += 1) {
      const ok = await go();
      if (!ok) return false;
    }
    return true;
  }
}
