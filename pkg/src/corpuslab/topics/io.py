"""Versioned JSON serialization for fitted topic models, CSV for effects."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import ParseError
from .effects import EffectEstimate
from .lda import GibbsLda

FORMAT = "corpuslab-model"
VERSION = 1


def model_to_dict(model: GibbsLda) -> dict:
    model._check_fitted()
    return {
        "format": FORMAT,
        "version": VERSION,
        "config": model.get_params(),
        "alpha": model.alpha_,
        "beta": model.beta_,
        "vocabulary": list(model.vocabulary_),
        "word_counts": model.word_counts_.tolist(),
        "doc_ids": list(model.doc_ids_),
        "phi": model.phi_.tolist(),
        "theta": model.theta_.tolist(),
        "draws": model.draws_.tolist(),
        "labels": list(model.labels_) if model.labels_ is not None else None,
    }


def model_from_dict(data: dict, origin: str = "<dict>") -> GibbsLda:
    if data.get("format") != FORMAT:
        raise ParseError(f"not a {FORMAT} container", path=origin)
    if data.get("version") != VERSION:
        raise ParseError(f"unsupported model version {data.get('version')!r}", path=origin)
    model = GibbsLda(**data["config"])
    model.alpha_ = float(data["alpha"])
    model.beta_ = float(data["beta"])
    model.vocabulary_ = tuple(data["vocabulary"])
    model.word_counts_ = np.asarray(data["word_counts"], dtype=np.int64)
    model.doc_ids_ = tuple(data["doc_ids"])
    model.phi_ = np.asarray(data["phi"])
    model.theta_ = np.asarray(data["theta"])
    draws = np.asarray(data["draws"])
    if draws.size == 0:
        draws = np.empty((0, model.theta_.shape[0], model.theta_.shape[1]))
    model.draws_ = draws
    model.assignments_ = ()
    model.labels_ = tuple(data["labels"]) if data.get("labels") else None
    return model


def save_model(model: GibbsLda, path: str | Path) -> None:
    text = json.dumps(model_to_dict(model), ensure_ascii=False, sort_keys=True,
                      separators=(",", ":"))
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_model(path: str | Path) -> GibbsLda:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return model_from_dict(json.load(fh), origin=str(path))


EFFECTS_CSV_HEADER = "topic,term,coef,se,p"


def effects_to_csv(estimates: list[EffectEstimate]) -> str:
    lines = [EFFECTS_CSV_HEADER]
    for e in estimates:
        lines.append(
            f"{e.topic},{e.term},{e.coefficient:.10g},{e.stderr:.10g},{e.p_value:.6g}"
        )
    return "\n".join(lines) + "\n"
