import { describe, expect, test } from "vitest";

import { PanelSequencer } from "../src/ordering.js";

describe("PanelSequencer", () => {
  test("a stale response is discarded once a newer request exists", () => {
    const seq = new PanelSequencer();
    const first = seq.next();
    const second = seq.next();
    expect(seq.isCurrent(first)).toBe(false);
    expect(seq.isCurrent(second)).toBe(true);
  });

  test("out-of-order resolution applies only the newest response", async () => {
    const seq = new PanelSequencer();
    const applied: string[] = [];

    function request(label: string, delayMs: number): Promise<void> {
      const token = seq.next();
      return new Promise((resolve) =>
        setTimeout(() => {
          if (seq.isCurrent(token)) applied.push(label);
          resolve();
        }, delayMs),
      );
    }

    // the older request resolves after the newer one
    await Promise.all([request("old", 30), request("new", 5)]);
    expect(applied).toEqual(["new"]);
  });
});
