import { describe, expect, test } from "vitest";

import {
  escapeHtml,
  renderFreq,
  renderKwic,
  renderSketch,
  renderSketchDiff,
  renderTopics,
} from "../src/render.js";
import type { KwicPayload, SketchDiffPayload, SketchPayload } from "../src/types.js";

const KWIC: KwicPayload = {
  total: 2,
  page: 1,
  page_size: 50,
  lines: [
    { doc_id: "phase1_week1_february_27", sent: 0, offset: 4,
      left: ["è", "uno"], node: ["tsunami"], right: ["continuo"] },
    { doc_id: "phase2_week10_may_4", sent: 0, offset: 0,
      left: [], node: ["tsunami"], right: ["economico"] },
  ],
};

const SKETCH: SketchPayload = {
  lemma: "economia",
  relations: {
    modifier: [
      { collocate: "italiano", f_head: 3, f_coll: 2, f_pair: 2, logdice: 13.68, size: 37.4 },
      { collocate: "malato", f_head: 3, f_coll: 1, f_pair: 1, logdice: 13.0, size: 36.0 },
      { collocate: "debole", f_head: 3, f_coll: 40, f_pair: 1, logdice: 8.54, size: 27.1 },
    ],
    subject_of: [],
  },
};

function styledSizes(html: string): number[] {
  return [...html.matchAll(/font-size:([\d.]+)px/g)].map((m) => Number(m[1]));
}

describe("renderKwic", () => {
  test("zero hits renders the explicit empty state", () => {
    expect(renderKwic({ total: 0, page: 1, page_size: 50, lines: [] })).toContain("0 hits");
  });

  test("one row per payload line, in payload order", () => {
    const html = renderKwic(KWIC);
    const rows = html.match(/<tr /g) ?? [];
    expect(rows).toHaveLength(2);
    expect(html.indexOf("phase1_week1_february_27")).toBeLessThan(
      html.indexOf("phase2_week10_may_4"),
    );
    expect(html).toContain(`<span class="total">2</span>`);
  });

  test("node words become sketch click-throughs", () => {
    const html = renderKwic(KWIC);
    expect(html).toContain(`data-lemma="tsunami"`);
    expect(html.match(/class="node-link"/g)).toHaveLength(2);
  });
});

describe("renderSketch", () => {
  test("font sizes are non-increasing down a ranked column", () => {
    const html = renderSketch(SKETCH, null);
    const sizes = styledSizes(html);
    expect(sizes).toHaveLength(3);
    expect(sizes[0]).toBeGreaterThan(sizes[2]!);
    expect([...sizes].sort((a, b) => b - a)).toEqual(sizes);
  });

  test("scores are rendered verbatim from the payload", () => {
    const html = renderSketch(SKETCH, null);
    expect(html).toContain(">13.68<");
    expect(html).toContain(">13<"); // String(13.0) === "13"
  });

  test("minScore 9 hides sub-threshold collocates", () => {
    const html = renderSketch(SKETCH, 9);
    expect(html).toContain("italiano");
    expect(html).toContain("malato");
    expect(html).not.toContain("debole");
  });

  test("empty relations render an explicit none marker", () => {
    expect(renderSketch(SKETCH, null)).toContain("none");
  });
});

describe("renderSketchDiff", () => {
  const DIFF: SketchDiffPayload = {
    lemma: "tsunami",
    a: "phase=1",
    b: "phase=2",
    entries: [
      { relation: "modifier", collocate: "continuo", score_a: 13.0, score_b: null, delta: null },
      { relation: "modifier", collocate: "eguale", score_a: 11.0, score_b: 11.0, delta: 0.0 },
    ],
  };

  test("absent sides render as a dash, not zero", () => {
    const html = renderSketchDiff(DIFF);
    expect(html).toContain(`<td class="b">–</td>`);
    expect(html).not.toContain(`<td class="b">0</td>`);
  });

  test("identical sides render delta 0", () => {
    const html = renderSketchDiff(DIFF);
    expect(html).toContain(`<td class="delta">0</td>`);
  });
});

describe("renderFreq / renderTopics", () => {
  test("freq numbers appear exactly as in the payload", () => {
    const html = renderFreq({ lemma: "tsunami", hits: 81, pmw: 348.34 });
    expect(html).toContain(`<span class="hits">81</span>`);
    expect(html).toContain(`<span class="pmw">348.34</span>`);
  });

  test("topics list labels, proportions and words verbatim", () => {
    const html = renderTopics(
      {
        topics: [
          { topic: 0, label: "salute", proportion: 0.42,
            words: [{ lemma: "virus", probability: 0.1 }] },
        ],
      },
      { by: "phase", groups: [{ group: 1, mean: [0.42, 0.58] }] },
    );
    expect(html).toContain("salute");
    expect(html).toContain(">0.42<");
    expect(html).toContain("virus");
    expect(html).toContain(">0.58<");
  });
});

describe("escapeHtml", () => {
  test("neutralizes markup in corpus text", () => {
    expect(escapeHtml(`<b>&"x"`)).toBe("&lt;b&gt;&amp;&quot;x&quot;");
  });
});
