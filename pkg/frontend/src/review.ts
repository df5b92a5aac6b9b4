/** Analyst review marks for metaphor candidates.
 *
 * Marks live entirely client-side (localStorage) so the service stays
 * read-only; the CSV export carries one row per reviewed candidate.
 */

import type { Candidate } from "./types.js";

export type Mark = "accepted" | "rejected";

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export function candidateKey(c: Candidate): string {
  return [c.doc, c.sent, c.target, c.domain, c.trigger].join("|");
}

export class ReviewStore {
  constructor(
    private readonly storage: StorageLike,
    private readonly key = "corpuslab.review",
  ) {}

  marks(): Record<string, Mark> {
    const raw = this.storage.getItem(this.key);
    if (!raw) return {};
    try {
      return JSON.parse(raw) as Record<string, Mark>;
    } catch {
      return {};
    }
  }

  setMark(candidate: Candidate, mark: Mark): void {
    const marks = this.marks();
    marks[candidateKey(candidate)] = mark;
    this.storage.setItem(this.key, JSON.stringify(marks));
  }

  clear(): void {
    this.storage.removeItem(this.key);
  }
}

export const EXPORT_HEADER = "doc,sent,target,domain,trigger,mark";

function csvField(value: string): string {
  return /[",\n]/.test(value) ? `"${value.replace(/"/g, '""')}"` : value;
}

/** One row per reviewed candidate (accepted or rejected); unreviewed
 * candidates are omitted. Zero reviews yield the bare header. */
export function exportCsv(candidates: Candidate[], marks: Record<string, Mark>): string {
  const lines = [EXPORT_HEADER];
  for (const c of candidates) {
    const mark = marks[candidateKey(c)];
    if (!mark) continue;
    lines.push(
      [c.doc, String(c.sent), c.target, c.domain, c.trigger, mark]
        .map(csvField)
        .join(","),
    );
  }
  return lines.join("\n") + "\n";
}
