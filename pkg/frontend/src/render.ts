/** Pure HTML renderers: payload in, markup out.
 *
 * Every number shown comes verbatim from the service payload (String(x) of
 * the JSON value) — the client never recomputes scores or counts. Keeping
 * these as string functions makes the render contract testable without a DOM.
 */

import { fontSizePx, visibleNodes } from "./scale.js";
import type {
  Candidate,
  FreqPayload,
  KwicPayload,
  PrevalencePayload,
  SketchDiffPayload,
  SketchPayload,
  TopicsPayload,
} from "./types.js";
import type { Mark } from "./review.js";
import { candidateKey } from "./review.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const esc = escapeHtml;

export function renderFreq(payload: FreqPayload): string {
  return (
    `<p class="freq"><strong>${esc(payload.lemma)}</strong>: ` +
    `<span class="hits">${String(payload.hits)}</span> hits, ` +
    `<span class="pmw">${String(payload.pmw)}</span> pmw</p>`
  );
}

export function renderKwic(payload: KwicPayload): string {
  if (payload.total === 0) {
    return `<p class="kwic-empty">0 hits</p>`;
  }
  const rows = payload.lines
    .map((line) => {
      const node = line.node.map(esc).join(" ");
      // the node lemma is a click-through into the sketch panel
      return (
        `<tr data-doc="${esc(line.doc_id)}" data-sent="${line.sent}">` +
        `<td class="left">${line.left.map(esc).join(" ")}</td>` +
        `<td class="node"><a href="#" class="node-link" data-lemma="${node}">${node}</a></td>` +
        `<td class="right">${line.right.map(esc).join(" ")}</td></tr>`
      );
    })
    .join("");
  return (
    `<p class="kwic-total"><span class="total">${String(payload.total)}</span> hits ` +
    `(page ${String(payload.page)})</p>` +
    `<table class="kwic"><tbody>${rows}</tbody></table>`
  );
}

const RELATION_TITLES: Record<string, string> = {
  modifier: "modifiers",
  subject_of: "subject of",
  object_of: "object of",
};

export function renderSketch(payload: SketchPayload, minScore: number | null): string {
  const columns = Object.entries(payload.relations)
    .map(([relation, nodes]) => {
      const kept = visibleNodes(nodes, minScore);
      const items = kept
        .map(
          (n) =>
            `<li style="font-size:${fontSizePx(n.logdice)}px" data-score="${String(n.logdice)}">` +
            `${esc(n.collocate)} <span class="score">${String(n.logdice)}</span></li>`,
        )
        .join("");
      return (
        `<div class="relation" data-relation="${esc(relation)}">` +
        `<h3>${esc(RELATION_TITLES[relation] ?? relation)}</h3>` +
        `<ul>${items || "<li class='empty'>none</li>"}</ul></div>`
      );
    })
    .join("");
  return `<div class="sketch" data-lemma="${esc(payload.lemma)}">${columns}</div>`;
}

export function renderSketchDiff(payload: SketchDiffPayload): string {
  const fmt = (v: number | null) => (v === null ? "–" : String(v));
  const rows = payload.entries
    .map(
      (e) =>
        `<tr data-relation="${esc(e.relation)}"><td>${esc(e.relation)}</td>` +
        `<td>${esc(e.collocate)}</td>` +
        `<td class="a">${fmt(e.score_a)}</td><td class="b">${fmt(e.score_b)}</td>` +
        `<td class="delta">${fmt(e.delta)}</td></tr>`,
    )
    .join("");
  return (
    `<table class="sketch-diff"><thead><tr><th>relation</th><th>collocate</th>` +
    `<th>${esc(payload.a)}</th><th>${esc(payload.b)}</th><th>Δ</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export function renderTopics(topics: TopicsPayload, prevalence: PrevalencePayload | null): string {
  const bars = topics.topics
    .map((t) => {
      const words = t.words.map((w) => esc(w.lemma)).join(", ");
      const width = Math.round(t.proportion * 1000) / 10;
      return (
        `<div class="topic"><h3>${esc(t.label)}</h3>` +
        `<div class="bar" style="width:${width}%"></div>` +
        `<span class="proportion">${String(t.proportion)}</span>` +
        `<p class="words">${words}</p></div>`
      );
    })
    .join("");
  let groups = "";
  if (prevalence) {
    groups =
      `<table class="prevalence"><tbody>` +
      prevalence.groups
        .map(
          (g) =>
            `<tr><th>${prevalence.by} ${String(g.group)}</th>` +
            g.mean.map((m) => `<td>${String(m)}</td>`).join("") +
            `</tr>`,
        )
        .join("") +
      `</tbody></table>`;
  }
  return `<div class="topics">${bars}${groups}</div>`;
}

export function renderError(code: string, message: string): string {
  return `<div class="error" data-code="${esc(code)}">${esc(message)}</div>`;
}

export function renderReviewQueue(
  candidates: Candidate[],
  marks: Record<string, Mark>,
): string {
  if (candidates.length === 0) {
    return `<p class="review-empty">no candidates</p>`;
  }
  const rows = candidates
    .map((c) => {
      const key = candidateKey(c);
      const mark = marks[key] ?? "";
      return (
        `<tr data-key="${esc(key)}" data-mark="${mark}">` +
        `<td>${esc(c.doc)}</td><td>${String(c.sent)}</td><td>${esc(c.target)}</td>` +
        `<td>${esc(c.domain)}</td><td>${esc(c.trigger)}</td>` +
        `<td class="snippet">${esc(c.snippet)}</td>` +
        `<td><button class="accept">accept</button>` +
        `<button class="reject">reject</button> <span class="mark">${mark}</span></td></tr>`
      );
    })
    .join("");
  return (
    `<table class="review"><thead><tr><th>doc</th><th>sent</th><th>target</th>` +
    `<th>domain</th><th>trigger</th><th>snippet</th><th>review</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}
