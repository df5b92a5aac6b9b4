/** Per-panel response ordering: in-flight requests may race, but only the
 * newest one may paint the panel; stale responses are discarded. */

export class PanelSequencer {
  private seq = 0;

  /** Token for a request issued now. */
  next(): number {
    this.seq += 1;
    return this.seq;
  }

  /** True when the token still belongs to the newest request. */
  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
