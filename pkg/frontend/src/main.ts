/** Browser entry point: wires the panels to the query service.
 *
 * The current view is fully described by the URL query string (deep links
 * reproduce it), requests are GETs only, and responses are applied in
 * request order per panel.
 */

import { ApiClient, ServiceError } from "./api.js";
import { PanelSequencer } from "./ordering.js";
import {
  renderError,
  renderFreq,
  renderKwic,
  renderReviewQueue,
  renderSketch,
  renderSketchDiff,
  renderTopics,
} from "./render.js";
import { ReviewStore, candidateKey, exportCsv } from "./review.js";
import type {
  Candidate,
  FreqPayload,
  KwicPayload,
  MetaPayload,
  MetaphorsPayload,
  PrevalencePayload,
  SketchDiffPayload,
  SketchPayload,
  TopicsPayload,
} from "./types.js";
import { DEFAULT_STATE, ViewState, fromParams, toParams } from "./viewstate.js";

const params = new URLSearchParams(location.search);
const SERVICE = params.get("service") ?? "http://127.0.0.1:8765";
const api = new ApiClient(SERVICE);
const review = new ReviewStore(localStorage);
const sequencer = new PanelSequencer();

let state: ViewState = fromParams(params);
let candidates: Candidate[] = [];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function pushState(next: Partial<ViewState>): void {
  state = { ...state, ...next };
  const query = toParams(state);
  if (SERVICE !== "http://127.0.0.1:8765") query.set("service", SERVICE);
  const suffix = query.toString();
  history.pushState(null, "", suffix ? `?${suffix}` : location.pathname);
  void refresh();
}

async function refresh(): Promise<void> {
  for (const name of ["kwic", "sketch", "topics", "review"]) {
    el(`tab-${name}`).classList.toggle("active", state.panel === name);
    el(`panel-${name}`).hidden = state.panel !== name;
  }
  (el("filter") as HTMLInputElement).value = state.filter;
  const token = sequencer.next();
  try {
    if (state.panel === "kwic") await refreshKwic(token);
    else if (state.panel === "sketch") await refreshSketch(token);
    else if (state.panel === "topics") await refreshTopics(token);
    else await refreshReview(token);
  } catch (err) {
    if (!sequencer.isCurrent(token)) return;
    const target = el(`panel-${state.panel}`);
    if (err instanceof ServiceError) {
      target.innerHTML = renderError(err.code, err.message);
    } else {
      target.innerHTML = renderError("network", String(err));
    }
  }
}

async function refreshKwic(token: number): Promise<void> {
  const panel = el("panel-kwic");
  if (!state.query) {
    panel.innerHTML = `<p class="hint">enter a lemma to search</p>`;
    return;
  }
  const [page, freq] = await Promise.all([
    api.get<KwicPayload>("/kwic", {
      q: state.query,
      filter: state.filter,
      page: state.page,
      sort: state.sort,
    }),
    api.get<FreqPayload>("/freq", { lemma: state.query, filter: state.filter }),
  ]);
  if (!sequencer.isCurrent(token)) return; // a newer query superseded this one
  panel.innerHTML =
    renderFreq(freq) +
    renderKwic(page) +
    `<div class="pager"><button id="prev" ${state.page <= 1 ? "disabled" : ""}>prev</button>` +
    `<span>page ${page.page}</span>` +
    `<button id="next" ${page.page * page.page_size >= page.total ? "disabled" : ""}>next</button></div>`;
  panel.querySelectorAll<HTMLAnchorElement>(".node-link").forEach((a) => {
    a.addEventListener("click", (event) => {
      event.preventDefault();
      // click-through keeps the active filter
      pushState({ panel: "sketch", lemma: a.dataset.lemma ?? "" });
    });
  });
  panel.querySelector("#prev")?.addEventListener("click", () => pushState({ page: state.page - 1 }));
  panel.querySelector("#next")?.addEventListener("click", () => pushState({ page: state.page + 1 }));
}

async function refreshSketch(token: number): Promise<void> {
  const panel = el("panel-sketch");
  if (!state.lemma) {
    panel.innerHTML = `<p class="hint">pick a lemma (e.g. click a KWIC node)</p>`;
    return;
  }
  const controls =
    `<div class="sketch-controls">min logDice ` +
    `<input id="min-score" type="range" min="0" max="14" step="0.5" ` +
    `value="${state.minScore ?? 0}"> <span id="min-score-value">${state.minScore ?? "off"}</span> ` +
    `<label>diff with <input id="diff-filter" placeholder="phase=2" ` +
    `value="${state.diffWith ?? ""}"></label></div>`;
  if (state.diffWith !== null && state.diffWith !== "") {
    const diff = await api.get<SketchDiffPayload>("/sketchdiff", {
      lemma: state.lemma,
      a: state.filter || "phase=1",
      b: state.diffWith,
    });
    if (!sequencer.isCurrent(token)) return;
    panel.innerHTML = controls + renderSketchDiff(diff);
  } else {
    const sketch = await api.get<SketchPayload>("/sketch", {
      lemma: state.lemma,
      filter: state.filter,
      min_score: state.minScore,
    });
    if (!sequencer.isCurrent(token)) return;
    // the client-side cutoff mirrors the slider without refetching
    panel.innerHTML = controls + renderSketch(sketch, state.minScore);
  }
  panel.querySelector<HTMLInputElement>("#min-score")?.addEventListener("change", (event) => {
    const value = Number((event.target as HTMLInputElement).value);
    pushState({ minScore: value > 0 ? value : null });
  });
  panel.querySelector<HTMLInputElement>("#diff-filter")?.addEventListener("change", (event) => {
    const value = (event.target as HTMLInputElement).value.trim();
    pushState({ diffWith: value || null });
  });
}

async function refreshTopics(token: number): Promise<void> {
  const panel = el("panel-topics");
  const topics = await api.get<TopicsPayload>("/topics");
  let prevalence: PrevalencePayload | null = null;
  try {
    prevalence = await api.get<PrevalencePayload>("/prevalence", { by: "phase" });
  } catch {
    prevalence = null; // single-phase corpora have no contrast to show
  }
  if (!sequencer.isCurrent(token)) return;
  panel.innerHTML = renderTopics(topics, prevalence);
}

async function refreshReview(token: number): Promise<void> {
  const panel = el("panel-review");
  const target = state.query || "economia";
  const payload = await api.get<MetaphorsPayload>("/metaphors", {
    target,
    filter: state.filter,
  });
  if (!sequencer.isCurrent(token)) return;
  candidates = payload.candidates;
  panel.innerHTML =
    `<div class="review-controls"><button id="export-csv">export CSV</button></div>` +
    renderReviewQueue(candidates, review.marks());
  panel.querySelectorAll<HTMLTableRowElement>("tr[data-key]").forEach((row) => {
    const candidate = candidates.find((c) => row.dataset.key === candidateKey(c));
    if (!candidate) return;
    row.querySelector(".accept")?.addEventListener("click", () => {
      review.setMark(candidate, "accepted");
      void refresh();
    });
    row.querySelector(".reject")?.addEventListener("click", () => {
      review.setMark(candidate, "rejected");
      void refresh();
    });
  });
  panel.querySelector("#export-csv")?.addEventListener("click", () => {
    const blob = new Blob([exportCsv(candidates, review.marks())], { type: "text/csv" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "review.csv";
    a.click();
    URL.revokeObjectURL(a.href);
  });
}


function wireChrome(): void {
  for (const name of ["kwic", "sketch", "topics", "review"] as const) {
    el(`tab-${name}`).addEventListener("click", () => pushState({ panel: name }));
  }
  el<HTMLFormElement>("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    pushState({ query: (el<HTMLInputElement>("query")).value.trim(), page: 1 });
  });
  el<HTMLInputElement>("filter").addEventListener("change", (event) => {
    pushState({ filter: (event.target as HTMLInputElement).value.trim(), page: 1 });
  });
  window.addEventListener("popstate", () => {
    state = fromParams(new URLSearchParams(location.search));
    void refresh();
  });
}

async function boot(): Promise<void> {
  try {
    const meta = await api.get<MetaPayload>("/meta");
    el("meta").textContent =
      `${meta.documents} documents · ${meta.tokens} tokens · ` +
      `${meta.vocabulary} types` + (meta.model ? ` · K=${meta.model.k}` : "");
  } catch (err) {
    el("meta").innerHTML = renderError("unreachable", `service unreachable at ${SERVICE}`);
  }
  (el<HTMLInputElement>("query")).value = state.query;
  wireChrome();
  await refresh();
}

void boot();
