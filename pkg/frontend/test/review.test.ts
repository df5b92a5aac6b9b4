import { describe, expect, test } from "vitest";

import { EXPORT_HEADER, ReviewStore, StorageLike, exportCsv } from "../src/review.js";
import type { Candidate } from "../src/types.js";

class MemoryStorage implements StorageLike {
  private data = new Map<string, string>();
  getItem(key: string): string | null {
    return this.data.get(key) ?? null;
  }
  setItem(key: string, value: string): void {
    this.data.set(key, value);
  }
  removeItem(key: string): void {
    this.data.delete(key);
  }
}

function candidate(n: number): Candidate {
  return {
    doc: `phase1_week1_march_${n}`,
    sent: 0,
    target: "economia",
    domain: "MACHINE",
    trigger: "motore",
    snippet: `frase ${n}`,
  };
}

const FOUR = [1, 2, 3, 4].map(candidate);

describe("ReviewStore", () => {
  test("marks persist across a simulated reload", () => {
    const backing = new MemoryStorage();
    const store = new ReviewStore(backing);
    store.setMark(FOUR[0]!, "accepted");
    store.setMark(FOUR[1]!, "rejected");
    // reload: a fresh store over the same persisted backing
    const reloaded = new ReviewStore(backing);
    expect(Object.values(reloaded.marks()).sort()).toEqual(["accepted", "rejected"]);
  });

  test("remarking a candidate overwrites its previous mark", () => {
    const store = new ReviewStore(new MemoryStorage());
    store.setMark(FOUR[0]!, "accepted");
    store.setMark(FOUR[0]!, "rejected");
    expect(Object.values(store.marks())).toEqual(["rejected"]);
  });

  test("corrupt persisted payloads degrade to no marks", () => {
    const backing = new MemoryStorage();
    backing.setItem("corpuslab.review", "{not json");
    expect(new ReviewStore(backing).marks()).toEqual({});
  });
});

describe("exportCsv", () => {
  test("zero reviews yield the bare header", () => {
    expect(exportCsv(FOUR, {})).toBe(EXPORT_HEADER + "\n");
  });

  test("accept 2 and reject 2 of 4: export has 4 rows, 2 accepted", () => {
    const store = new ReviewStore(new MemoryStorage());
    store.setMark(FOUR[0]!, "accepted");
    store.setMark(FOUR[1]!, "accepted");
    store.setMark(FOUR[2]!, "rejected");
    store.setMark(FOUR[3]!, "rejected");
    const lines = exportCsv(FOUR, store.marks()).trim().split("\n");
    expect(lines[0]).toBe(EXPORT_HEADER);
    expect(lines).toHaveLength(5);
    expect(lines.filter((l) => l.endsWith(",accepted"))).toHaveLength(2);
    expect(lines.filter((l) => l.endsWith(",rejected"))).toHaveLength(2);
  });

  test("unreviewed candidates are omitted", () => {
    const store = new ReviewStore(new MemoryStorage());
    store.setMark(FOUR[0]!, "accepted");
    const lines = exportCsv(FOUR, store.marks()).trim().split("\n");
    expect(lines).toHaveLength(2);
  });

  test("fields containing commas are quoted", () => {
    const tricky: Candidate = { ...candidate(9), trigger: 'mot,ore"x' };
    const store = new ReviewStore(new MemoryStorage());
    store.setMark(tricky, "accepted");
    const csv = exportCsv([tricky], store.marks());
    expect(csv).toContain('"mot,ore""x"');
  });
});
