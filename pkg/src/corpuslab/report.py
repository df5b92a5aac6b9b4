"""Figure-data emission: one machine-readable file per report panel.

Emitted files (under the run directory):
  top_words.json          ranked topic vocabularies with probabilities
  proportions.json        corpus-wide topic shares (bar data)
  phase_effects.csv       prevalence contrast between phases
  weekly_prevalence.json  per-week estimates with posterior uncertainty bands
  sketch_<lemma>.json     word-sketch graphs (score-proportional node size)
  *.svg                   optional minimal renderings of the bar panels
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .colloc import round_half_up, sketch_to_graph, word_sketch
from .corpus.model import Corpus
from .errors import MissingModel
from .topics import effects_to_csv, estimate_effect, top_words
from .topics.lda import GibbsLda

DEFAULT_SKETCH_MIN_SCORE = 9.0
TOP_WORDS_N = 10


def _dump(data: dict) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=True, separators=(",", ":")) + "\n"


def _label(model: GibbsLda, topic: int) -> str:
    if model.labels_ is not None and topic < len(model.labels_):
        return model.labels_[topic]
    return f"topic{topic}"


def top_words_data(model: GibbsLda, n: int = TOP_WORDS_N) -> dict:
    vocab_index = {lemma: i for i, lemma in enumerate(model.vocabulary_)}
    topics = []
    for k in range(model.n_topics):
        words = top_words(model, k, n=n)
        topics.append(
            {
                "topic": k,
                "label": _label(model, k),
                "words": [
                    {"lemma": w, "probability": float(model.phi_[k, vocab_index[w]])}
                    for w in words
                ],
            }
        )
    return {"topics": topics}


def proportions_data(model: GibbsLda) -> dict:
    means = model.theta_.mean(axis=0)
    return {
        "topics": [
            {"topic": k, "label": _label(model, k), "proportion": float(means[k])}
            for k in range(model.n_topics)
        ]
    }


def weekly_prevalence_data(model: GibbsLda, corpus: Corpus) -> dict:
    """Per-week mean proportions with 95% bands over posterior draws."""
    weeks_of_docs = np.array([doc.id.week for doc in corpus.documents])
    weeks = sorted(set(weeks_of_docs.tolist()))
    draws = model.draws_ if model.draws_.shape[0] else model.theta_[np.newaxis]
    topics = []
    for k in range(model.n_topics):
        mean, lo, hi = [], [], []
        for w in weeks:
            mask = weeks_of_docs == w
            per_draw = draws[:, mask, k].mean(axis=1)
            mean.append(float(model.theta_[mask, k].mean()))
            lo.append(float(np.quantile(per_draw, 0.025)))
            hi.append(float(np.quantile(per_draw, 0.975)))
        topics.append(
            {"topic": k, "label": _label(model, k), "mean": mean, "lo": lo, "hi": hi}
        )
    return {"weeks": weeks, "topics": topics}


def _bar_svg(labels: list[str], values: list[float], title: str) -> str:
    """Tiny dependency-free SVG bar chart (deterministic output)."""
    width, bar_h, gap, left = 480, 24, 10, 120
    height = len(values) * (bar_h + gap) + gap + 24
    vmax = max(values) if values else 1.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="sans-serif" font-size="12">',
        f'<text x="8" y="16" font-weight="bold">{title}</text>',
    ]
    y = 28
    for label, value in zip(labels, values):
        w = 0 if vmax == 0 else round((width - left - 70) * value / vmax, 1)
        parts.append(f'<text x="8" y="{y + bar_h - 8}">{label}</text>')
        parts.append(f'<rect x="{left}" y="{y}" width="{w}" height="{bar_h}" fill="#4878a8"/>')
        parts.append(f'<text x="{left + w + 6}" y="{y + bar_h - 8}">{round_half_up(value, 3)}</text>')
        y += bar_h + gap
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_report(
    model: GibbsLda | None,
    corpus: Corpus,
    out_dir: str | Path,
    sketch_lemmas: tuple[str, ...] = (),
    min_score: float | None = DEFAULT_SKETCH_MIN_SCORE,
    svg: bool = False,
) -> list[Path]:
    """Write every figure-data file; returns the paths written."""
    if model is None:
        raise MissingModel("report emission requires a fitted model")
    model._check_fitted()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def write(name: str, text: str) -> None:
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    write("top_words.json", _dump(top_words_data(model)))
    proportions = proportions_data(model)
    write("proportions.json", _dump(proportions))
    write("phase_effects.csv", effects_to_csv(estimate_effect(model, corpus, "phase")))
    write("weekly_prevalence.json", _dump(weekly_prevalence_data(model, corpus)))

    for lemma in sketch_lemmas:
        sketch = word_sketch(corpus, lemma, min_score=min_score)
        write(f"sketch_{lemma}.json", _dump(sketch_to_graph(sketch)))

    if svg:
        rows = proportions["topics"]
        write(
            "proportions.svg",
            _bar_svg([r["label"] for r in rows], [r["proportion"] for r in rows],
                     "Topic proportions"),
        )
    return written
