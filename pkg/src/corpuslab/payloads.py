"""JSON payload builders shared by the CLI (--json mode) and the HTTP
service, so both surfaces emit byte-identical bodies for the same query."""

from __future__ import annotations

import json

import numpy as np

from .colloc import FreqReport, SketchDiff, WordSketch, round_half_up, sketch_to_graph
from .concord import KwicPage
from .corpus.model import Corpus
from .metaphor import MetaphorCandidate
from .topics import EffectEstimate, top_words
from .topics.lda import GibbsLda


def dump_payload(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def freq_payload(report: FreqReport) -> dict:
    return {"lemma": report.lemma, "hits": report.hits, "pmw": report.pmw}


def kwic_payload(page: KwicPage) -> dict:
    return {
        "total": page.total,
        "page": page.page,
        "page_size": page.page_size,
        "lines": [
            {
                "doc_id": str(line.doc_id),
                "sent": line.sent,
                "offset": line.offset,
                "left": list(line.left),
                "node": list(line.node),
                "right": list(line.right),
            }
            for line in page.lines
        ],
    }


def sketch_payload(sketch: WordSketch) -> dict:
    return sketch_to_graph(sketch)


def sketch_diff_payload(head: str, entries: list[SketchDiff], a: str, b: str) -> dict:
    return {
        "lemma": head,
        "a": a,
        "b": b,
        "entries": [
            {
                "relation": e.relation.value,
                "collocate": e.collocate,
                "score_a": None if e.score_a is None else round_half_up(e.score_a),
                "score_b": None if e.score_b is None else round_half_up(e.score_b),
                "delta": None if e.delta is None else round_half_up(e.delta),
            }
            for e in entries
        ],
    }


def topics_payload(model: GibbsLda, n_words: int = 10) -> dict:
    vocab_index = {lemma: i for i, lemma in enumerate(model.vocabulary_)}
    proportions = model.theta_.mean(axis=0)
    topics = []
    for k in range(model.n_topics):
        words = top_words(model, k, n=n_words)
        label = model.labels_[k] if model.labels_ else f"topic{k}"
        topics.append(
            {
                "topic": k,
                "label": label,
                "proportion": float(proportions[k]),
                "words": [
                    {"lemma": w, "probability": float(model.phi_[k, vocab_index[w]])}
                    for w in words
                ],
            }
        )
    return {"topics": topics}


def effects_payload(covariate: str, estimates: list[EffectEstimate]) -> dict:
    return {
        "covariate": covariate,
        "estimates": [
            {
                "topic": e.topic,
                "term": e.term,
                "coef": e.coefficient,
                "se": e.stderr,
                "p": e.p_value,
            }
            for e in estimates
        ],
    }


def prevalence_payload(by: str, rows: list[tuple[int, np.ndarray]]) -> dict:
    return {
        "by": by,
        "groups": [{"group": g, "mean": [float(x) for x in row]} for g, row in rows],
    }


def metaphors_payload(candidates: list[MetaphorCandidate]) -> dict:
    return {
        "candidates": [
            {
                "doc": str(c.doc_id),
                "sent": c.sent,
                "target": c.target,
                "domain": c.source_domain,
                "trigger": c.trigger,
                "snippet": " ".join(c.snippet),
            }
            for c in candidates
        ]
    }


def meta_payload(corpus: Corpus, model: GibbsLda | None) -> dict:
    phases: dict[str, int] = {}
    weeks: set[int] = set()
    for doc in corpus.documents:
        phases[str(doc.id.phase)] = phases.get(str(doc.id.phase), 0) + 1
        weeks.add(doc.id.week)
    return {
        "documents": len(corpus.documents),
        "tokens": corpus.token_count,
        "vocabulary": len(corpus.vocabulary),
        "phases": phases,
        "weeks": sorted(weeks),
        "tagged": corpus.has_dependencies,
        "model": {"k": model.n_topics} if model is not None else None,
    }
