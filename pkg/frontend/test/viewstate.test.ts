import { describe, expect, test } from "vitest";

import { DEFAULT_STATE, ViewState, fromParams, toParams } from "../src/viewstate.js";

const STATES: ViewState[] = [
  DEFAULT_STATE,
  { ...DEFAULT_STATE, panel: "sketch", lemma: "economia", minScore: 9, filter: "phase=1" },
  { ...DEFAULT_STATE, panel: "kwic", query: "tsunami", page: 3, sort: "left" },
  { ...DEFAULT_STATE, panel: "review", query: "società", filter: "phase=2,week=10-12" },
  { ...DEFAULT_STATE, panel: "sketch", lemma: "società", diffWith: "phase=2", filter: "phase=1" },
  { ...DEFAULT_STATE, minScore: 0 },
];

describe("view state deep links", () => {
  test.each(STATES.map((s, i) => [i, s] as const))("round-trips state %i", (_i, state) => {
    expect(fromParams(toParams(state))).toEqual(state);
  });

  test("defaults are omitted from the URL", () => {
    expect(toParams(DEFAULT_STATE).toString()).toBe("");
  });

  test("survives URL string serialization", () => {
    const state: ViewState = {
      ...DEFAULT_STATE,
      panel: "sketch",
      lemma: "economia",
      filter: "phase=1,week=2-5",
      minScore: 9,
    };
    const url = `http://host/?${toParams(state).toString()}`;
    expect(fromParams(new URL(url).searchParams)).toEqual(state);
  });

  test("garbage params fall back to defaults", () => {
    const params = new URLSearchParams("panel=bogus&page=-3&min_score=");
    const state = fromParams(params);
    expect(state.panel).toBe("kwic");
    expect(state.page).toBe(1);
    expect(state.minScore).toBeNull();
  });
});
