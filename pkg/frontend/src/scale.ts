/** Font scaling for sketch panels: text size grows with association score. */

import type { SketchNode } from "./types.js";

export const BASE_FONT_PX = 12;
export const PX_PER_SCORE = 1.6;

/** Monotone non-decreasing in the score; strictly increasing above zero. */
export function fontSizePx(logdice: number): number {
  const px = BASE_FONT_PX + PX_PER_SCORE * Math.max(logdice, 0);
  return Math.round(px * 10) / 10;
}

/** Nodes surviving a minimum-score cutoff (null means no cutoff). */
export function visibleNodes(nodes: SketchNode[], minScore: number | null): SketchNode[] {
  if (minScore === null) return nodes;
  return nodes.filter((n) => n.logdice >= minScore);
}
