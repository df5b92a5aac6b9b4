"""Covariate effects on topical prevalence.

Uncertainty in the fitted proportions is propagated by the method of
composition: an ordinary least squares regression of each topic's proportion
on the covariate design is refit per saved posterior draw, and the per-draw
coefficients are pooled (within-draw sampling variance plus between-draw
variance, Rubin-style). p-values use a two-sided normal approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..corpus.model import Corpus
from ..errors import DegenerateDesign, ModelCorpusMismatch
from .lda import GibbsLda


@dataclass(frozen=True)
class EffectEstimate:
    topic: int
    term: str  # "intercept" or a covariate level like "phase2" / "week3"
    coefficient: float
    stderr: float
    p_value: float


def _covariate_values(corpus: Corpus, covariate: str) -> list[int]:
    if covariate == "phase":
        return [doc.id.phase for doc in corpus.documents]
    if covariate == "week":
        return [doc.id.week for doc in corpus.documents]
    raise ValueError(f"unknown covariate {covariate!r} (expected phase|week)")


def _design_matrix(values: list[int], covariate: str) -> tuple[np.ndarray, list[str]]:
    """Categorical dummy coding; reference level is 1 when present, else the
    smallest observed level (weeks count from 1, the intercept)."""
    levels = sorted(set(values))
    if len(levels) < 2:
        raise DegenerateDesign(f"covariate {covariate!r} is constant ({levels})")
    reference = 1 if 1 in levels else levels[0]
    others = [lv for lv in levels if lv != reference]
    X = np.zeros((len(values), 1 + len(others)))
    X[:, 0] = 1.0
    for j, lv in enumerate(others, start=1):
        X[:, j] = [1.0 if v == lv else 0.0 for v in values]
    if np.linalg.matrix_rank(X) < X.shape[1]:
        raise DegenerateDesign(f"design matrix for {covariate!r} is rank deficient")
    terms = ["intercept"] + [f"{covariate}{lv}" for lv in others]
    return X, terms


def _check_alignment(model: GibbsLda, corpus: Corpus) -> None:
    ids = tuple(str(doc.id) for doc in corpus.documents)
    if ids != model.doc_ids_:
        raise ModelCorpusMismatch(
            "corpus documents do not match the documents the model was fitted on"
        )


def estimate_effect(model: GibbsLda, corpus: Corpus, covariate: str) -> list[EffectEstimate]:
    """Per-topic regression of prevalence on a document covariate.

    Returns one intercept estimate plus one estimate per non-reference level
    for every topic, in topic-major order.
    """
    model._check_fitted()
    _check_alignment(model, corpus)
    values = _covariate_values(corpus, covariate)
    X, terms = _design_matrix(values, covariate)

    draws = model.draws_
    if draws.shape[0] == 0:
        draws = model.theta_[np.newaxis, :, :]
    m, n_docs, n_topics = draws.shape
    p = X.shape[1]
    if n_docs <= p:
        raise DegenerateDesign(f"{n_docs} documents cannot support {p} coefficients")

    xtx_inv = np.linalg.inv(X.T @ X)
    hat = xtx_inv @ X.T

    out: list[EffectEstimate] = []
    for topic in range(n_topics):
        coefs = np.empty((m, p))
        variances = np.empty((m, p))
        for s in range(m):
            y = draws[s, :, topic]
            b = hat @ y
            resid = y - X @ b
            sigma2 = float(resid @ resid) / (n_docs - p)
            coefs[s] = b
            variances[s] = sigma2 * np.diag(xtx_inv)
        pooled = coefs.mean(axis=0)
        within = variances.mean(axis=0)
        between = coefs.var(axis=0, ddof=1) if m > 1 else np.zeros(p)
        total_var = within + (1.0 + 1.0 / m) * between
        for j, term in enumerate(terms):
            se = math.sqrt(total_var[j])
            if se > 0:
                p_value = math.erfc(abs(pooled[j] / se) / math.sqrt(2.0))
            else:  # exact fit: any nonzero coefficient is infinitely significant
                p_value = 0.0 if pooled[j] != 0 else 1.0
            out.append(
                EffectEstimate(
                    topic=topic,
                    term=term,
                    coefficient=float(pooled[j]),
                    stderr=se,
                    p_value=p_value,
                )
            )
    return out


def prevalence_by(model: GibbsLda, corpus: Corpus, grouping: str) -> list[tuple[int, np.ndarray]]:
    """Mean topic proportions per covariate group, groups ascending.

    Each row is a mean of proportion rows, so it sums to 1.
    """
    model._check_fitted()
    _check_alignment(model, corpus)
    values = _covariate_values(corpus, grouping)
    groups = sorted(set(values))
    rows: list[tuple[int, np.ndarray]] = []
    values_arr = np.asarray(values)
    for g in groups:
        mask = values_arr == g
        rows.append((g, model.theta_[mask].mean(axis=0)))
    return rows
