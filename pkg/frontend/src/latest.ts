/**
 * Monotone request sequencing: responses arriving out of order are
 * discarded so the UI never shows a result older than the one on screen.
 */
export class LatestGate {
  private nextSeq = 0;
  private shownSeq = -1;

  /** Stamp an outgoing request. */
  issue(): number {
    return this.nextSeq++;
  }

  /** True iff a response with this stamp may be displayed. */
  accept(seq: number): boolean {
    if (seq <= this.shownSeq) return false;
    this.shownSeq = seq;
    return true;
  }
}
