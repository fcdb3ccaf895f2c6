/** Board state machine, DOM-free so the whole game flow is unit-testable.
 *
 * Every view is rebuilt verbatim from a /api/position response; the client
 * computes nothing itself beyond cross-checking that the server's per-move
 * counts add up to its total (a failed check raises the banner — a wrong
 * count would silently mislead the player otherwise). In-flight responses
 * carry a sequence ticket; anything stale is dropped on arrival.
 */

import {
  ApiError,
  FetchLike,
  MoveOption,
  PositionReport,
  fetchPosition,
  fetchSample,
  positionText,
} from "./api";
import { countsEqual, sumCounts } from "./format";

export interface BoardView {
  position: number[];
  candiesLeft: number;
  eaten: number;
  waysFromStart: string;
  waysRemaining: string;
  moves: MoveOption[];
  complete: boolean;
  lastMove: number | null;
  canUndo: boolean;
}

export interface BoardEvents {
  onUpdate(view: BoardView): void;
  onBanner(message: string | null): void;
}

function inconsistency(report: PositionReport): string | null {
  if (report.position.length === 0) {
    return null;
  }
  const childSum = sumCounts(report.moves.map((m) => m.count));
  if (!countsEqual(childSum, report.count)) {
    return `server inconsistency: move counts sum to ${childSum} but the total is ${report.count}`;
  }
  return null;
}

export class BoardController {
  private history: PositionReport[] = [];
  private startTotal = 0;
  private startCount = "1";
  private lastMove: number | null = null;
  private seq = 0;

  constructor(
    private events: BoardEvents,
    private fetchImpl: FetchLike = fetch,
  ) {}

  get view(): BoardView {
    const current = this.history[this.history.length - 1];
    if (!current) {
      throw new Error("no position loaded");
    }
    return {
      position: [...current.position],
      candiesLeft: current.total,
      eaten: this.startTotal - current.total,
      waysFromStart: this.startCount,
      waysRemaining: current.count,
      moves: current.moves.map((m) => ({ ...m, position: [...m.position] })),
      complete: current.position.length === 0,
      lastMove: this.lastMove,
      canUndo: this.history.length > 1,
    };
  }

  private publish(report: PositionReport): void {
    const problem = inconsistency(report);
    this.events.onBanner(problem);
    this.events.onUpdate(this.view);
  }

  private async request(pos: string): Promise<PositionReport | null> {
    const ticket = ++this.seq;
    try {
      const report = await fetchPosition(pos, this.fetchImpl);
      return ticket === this.seq ? report : null;
    } catch (error) {
      if (ticket === this.seq) {
        this.events.onBanner(
          error instanceof ApiError ? error.message : String(error),
        );
      }
      return null;
    }
  }

  async load(text: string): Promise<void> {
    const report = await this.request(text);
    if (!report) {
      return;
    }
    this.history = [report];
    this.startTotal = report.total;
    this.startCount = report.count;
    this.lastMove = null;
    this.publish(report);
  }

  async play(index: number): Promise<void> {
    const current = this.history[this.history.length - 1];
    if (!current) {
      return;
    }
    const move = current.moves.find((m) => m.index === index);
    if (!move) {
      this.events.onBanner(`move ${index} is not legal here`);
      return;
    }
    const report = await this.request(positionText(move.position));
    if (!report) {
      return;
    }
    this.history.push(report);
    this.lastMove = index;
    this.publish(report);
  }

  undo(): void {
    this.seq += 1; // undo also cancels any in-flight load or playout
    if (this.history.length > 1) {
      this.history.pop();
      this.lastMove = null;
      const current = this.history[this.history.length - 1];
      if (current) {
        this.publish(current);
      }
    }
  }

  /** Walk one uniformly sampled play from the current position, pausing
   * `stepMs` between moves. Each intermediate board is a real server
   * report, so annotations stay live during the animation. */
  async randomPlayout(stepMs = 600, seed?: number): Promise<void> {
    const current = this.history[this.history.length - 1];
    if (!current || current.position.length === 0) {
      return;
    }
    const ticket = ++this.seq;
    let sampled;
    try {
      sampled = await fetchSample(positionText(current.position), seed, this.fetchImpl);
    } catch (error) {
      this.events.onBanner(
        error instanceof ApiError ? error.message : String(error),
      );
      return;
    }
    if (ticket !== this.seq) {
      return;
    }
    for (const next of sampled.play.slice(1)) {
      if (ticket !== this.seq) {
        return; // the user clicked something else mid-playout
      }
      const before = this.history[this.history.length - 1];
      const moved = before?.moves.find(
        (m) => positionText(m.position) === positionText(next),
      );
      const report = await fetchPosition(positionText(next), this.fetchImpl).catch(
        (error: unknown) => {
          this.events.onBanner(
            error instanceof ApiError ? error.message : String(error),
          );
          return null;
        },
      );
      if (!report || ticket !== this.seq) {
        return;
      }
      this.history.push(report);
      this.lastMove = moved ? moved.index : null;
      this.publish(report);
      if (stepMs > 0 && report.position.length > 0) {
        await new Promise((resolve) => setTimeout(resolve, stepMs));
      }
    }
  }
}
