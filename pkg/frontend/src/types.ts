/** Payload shapes of the corpuslab query service (all endpoints are GET/JSON). */

export interface FreqPayload {
  lemma: string;
  hits: number;
  pmw: number;
}

export interface KwicLine {
  doc_id: string;
  sent: number;
  offset: number;
  left: string[];
  node: string[];
  right: string[];
}

export interface KwicPayload {
  total: number;
  page: number;
  page_size: number;
  lines: KwicLine[];
}

export interface SketchNode {
  collocate: string;
  f_head: number;
  f_coll: number;
  f_pair: number;
  logdice: number;
  size: number;
}

export interface SketchPayload {
  lemma: string;
  relations: Record<string, SketchNode[]>;
}

export interface SketchDiffEntry {
  relation: string;
  collocate: string;
  score_a: number | null;
  score_b: number | null;
  delta: number | null;
}

export interface SketchDiffPayload {
  lemma: string;
  a: string;
  b: string;
  entries: SketchDiffEntry[];
}

export interface TopicWord {
  lemma: string;
  probability: number;
}

export interface TopicEntry {
  topic: number;
  label: string;
  proportion: number;
  words: TopicWord[];
}

export interface TopicsPayload {
  topics: TopicEntry[];
}

export interface PrevalenceGroup {
  group: number;
  mean: number[];
}

export interface PrevalencePayload {
  by: string;
  groups: PrevalenceGroup[];
}

export interface Candidate {
  doc: string;
  sent: number;
  target: string;
  domain: string;
  trigger: string;
  snippet: string;
}

export interface MetaphorsPayload {
  candidates: Candidate[];
}

export interface MetaPayload {
  documents: number;
  tokens: number;
  vocabulary: number;
  phases: Record<string, number>;
  weeks: number[];
  tagged: boolean;
  model: { k: number } | null;
}

export interface ErrorEnvelope {
  error: { code: string; message: string };
}
