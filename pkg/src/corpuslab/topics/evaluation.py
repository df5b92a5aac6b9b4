"""Model selection over candidate topic counts.

For each K the corpus is refit and scored on
  * held-out log-likelihood by document completion: every second token of a
    seeded 10% document sample is held out, proportions are estimated from
    the kept halves (which stay in the training corpus), and held-out tokens
    are scored under theta·phi;
  * semantic coherence: the co-document statistic over each topic's top-10
    words, averaged over topics;
  * exclusivity: mean FREX score of each topic's top-10 FREX-ranked words.

Everything is deterministic for a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from sklearn.base import clone

from ..corpus.model import Corpus, Document
from ..errors import InvalidConfig
from .lda import FREX_WEIGHT, GibbsLda, frex_scores, top_words

HOLDOUT_FRACTION = 0.1
COHERENCE_TOP_N = 10


@dataclass(frozen=True)
class KSearchRow:
    k: int
    held_out_log_lik: float  # mean log-likelihood per held-out token
    coherence: float
    exclusivity: float


def _split_corpus(corpus: Corpus, seed: int) -> tuple[Corpus, dict[int, list[str]]]:
    """Hold out odd-position tokens of a sampled 10% of documents.

    Returns the training corpus (kept halves substituted in place) and a map
    of document index -> held-out lemma list.
    """
    rng = np.random.default_rng([seed, 7])
    n_docs = len(corpus.documents)
    n_holdout = max(1, round(HOLDOUT_FRACTION * n_docs))
    chosen = set(rng.choice(n_docs, size=n_holdout, replace=False).tolist())

    documents: list[Document] = []
    held_out: dict[int, list[str]] = {}
    for d, doc in enumerate(corpus.documents):
        if d not in chosen:
            documents.append(doc)
            continue
        kept = [tok for i, tok in enumerate(doc.tokens) if i % 2 == 0]
        held = [tok.lemma for i, tok in enumerate(doc.tokens) if i % 2 == 1]
        tokens = tuple(replace(tok, offset=i) for i, tok in enumerate(kept))
        if tokens:
            documents.append(Document(id=doc.id, tokens=tokens, source=doc.source))
            held_out[len(documents) - 1] = held
    return Corpus(documents), held_out


def _held_out_log_lik(model: GibbsLda, held_out: dict[int, list[str]]) -> float:
    vocab = {lemma: i for i, lemma in enumerate(model.vocabulary_)}
    total = 0.0
    n = 0
    for d, lemmas in held_out.items():
        theta_d = model.theta_[d]
        mix = theta_d @ model.phi_
        for lemma in lemmas:
            w = vocab.get(lemma)
            if w is None:
                continue  # no probability mass for out-of-training words
            total += math.log(mix[w])
            n += 1
    return total / n if n else float("-inf")


def coherence(model: GibbsLda, corpus: Corpus, top_n: int = COHERENCE_TOP_N) -> float:
    """Co-document coherence averaged over topics.

    For each topic's top words (by probability), sums
    log((codoc(m, l) + 1) / doc(l)) over ranked pairs.
    """
    doc_sets = [frozenset(tok.lemma for tok in doc.tokens) for doc in corpus.documents]
    scores = []
    for k in range(model.n_topics):
        words = top_words(model, k, n=top_n, weighting="probability")
        doc_freq = {w: sum(1 for s in doc_sets if w in s) for w in words}
        score = 0.0
        for m in range(1, len(words)):
            for l in range(m):
                codoc = sum(1 for s in doc_sets if words[m] in s and words[l] in s)
                denom = doc_freq[words[l]]
                if denom:
                    score += math.log((codoc + 1) / denom)
        scores.append(score)
    return float(np.mean(scores))


def exclusivity(model: GibbsLda, top_n: int = COHERENCE_TOP_N, weight: float = FREX_WEIGHT) -> float:
    """Mean FREX score of each topic's top FREX-ranked words."""
    frex = frex_scores(model, weight)
    scores = []
    for k in range(model.n_topics):
        top = np.sort(frex[k])[::-1][: min(top_n, frex.shape[1])]
        scores.append(top.mean())
    return float(np.mean(scores))


def search_k(
    corpus: Corpus,
    ks,
    template: GibbsLda | None = None,
) -> list[KSearchRow]:
    """Score candidate topic counts; one row per K.

    ``template`` carries the shared sampler configuration (priors, sweeps,
    seed); per-candidate fits differ only in K.
    """
    ks = list(ks)
    if not ks:
        raise InvalidConfig("no candidate K values")
    template = template if template is not None else GibbsLda()
    train, held_out = _split_corpus(corpus, template.seed)
    rows = []
    for k in ks:
        est = clone(template)
        est.set_params(n_topics=k)
        est.fit(train)
        rows.append(
            KSearchRow(
                k=k,
                held_out_log_lik=_held_out_log_lik(est, held_out),
                coherence=coherence(est, train),
                exclusivity=exclusivity(est),
            )
        )
    return rows
