/** URL-serializable view state: deep links reproduce a view exactly. */

export type Panel = "kwic" | "sketch" | "topics" | "review";

export interface ViewState {
  panel: Panel;
  query: string;
  filter: string; // service filter grammar, passed through verbatim
  page: number;
  lemma: string; // sketch headword
  minScore: number | null;
  diffWith: string | null; // second filter when the sketch panel is in diff mode
  sort: string;
}

export const DEFAULT_STATE: ViewState = {
  panel: "kwic",
  query: "",
  filter: "",
  page: 1,
  lemma: "",
  minScore: null,
  diffWith: null,
  sort: "position",
};

const PANELS: Panel[] = ["kwic", "sketch", "topics", "review"];

/** Serialize, omitting fields at their default value to keep URLs short. */
export function toParams(state: ViewState): URLSearchParams {
  const params = new URLSearchParams();
  if (state.panel !== DEFAULT_STATE.panel) params.set("panel", state.panel);
  if (state.query) params.set("q", state.query);
  if (state.filter) params.set("filter", state.filter);
  if (state.page !== 1) params.set("page", String(state.page));
  if (state.lemma) params.set("lemma", state.lemma);
  if (state.minScore !== null) params.set("min_score", String(state.minScore));
  if (state.diffWith !== null) params.set("diff", state.diffWith);
  if (state.sort !== DEFAULT_STATE.sort) params.set("sort", state.sort);
  return params;
}

export function fromParams(params: URLSearchParams): ViewState {
  const panel = params.get("panel");
  const page = Number(params.get("page") ?? "1");
  const minScore = params.get("min_score");
  return {
    panel: PANELS.includes(panel as Panel) ? (panel as Panel) : DEFAULT_STATE.panel,
    query: params.get("q") ?? "",
    filter: params.get("filter") ?? "",
    page: Number.isInteger(page) && page >= 1 ? page : 1,
    lemma: params.get("lemma") ?? "",
    minScore: minScore === null || minScore === "" ? null : Number(minScore),
    diffWith: params.get("diff"),
    sort: params.get("sort") ?? DEFAULT_STATE.sort,
  };
}
