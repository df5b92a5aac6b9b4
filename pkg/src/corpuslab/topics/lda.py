"""Latent topic model fit by collapsed Gibbs sampling.

``GibbsLda`` follows the scikit-learn estimator protocol: hyperparameters in
``__init__`` (so ``get_params``/``set_params``/``clone`` work), ``fit`` on a
``Corpus``, fitted state in trailing-underscore attributes, ``transform`` for
folding new documents into a fitted model.

Point estimates come from counts averaged over post-burnin sweeps; thinned
per-sweep snapshots of the document-topic proportions are kept as posterior
draws for downstream covariate regression. Fits are bit-for-bit reproducible
for a fixed seed: the kernel consumes pre-generated uniforms from a seeded
numpy generator.
"""

from __future__ import annotations

import numpy as np
from numba import njit
from sklearn.base import BaseEstimator

from ..corpus.model import Corpus
from ..errors import EmptyCorpus, InvalidConfig, TopicOutOfRange

FREX_WEIGHT = 0.7


@njit(cache=True)
def _gibbs_sweep(doc_of, word_of, z, n_dk, n_kw, n_k, alpha, beta, uniforms):
    K = n_k.shape[0]
    V = n_kw.shape[1]
    cdf = np.empty(K)
    for i in range(doc_of.shape[0]):
        d = doc_of[i]
        w = word_of[i]
        k = z[i]
        n_dk[d, k] -= 1.0
        n_kw[k, w] -= 1.0
        n_k[k] -= 1.0
        total = 0.0
        for kk in range(K):
            total += (n_dk[d, kk] + alpha) * (n_kw[kk, w] + beta) / (n_k[kk] + V * beta)
            cdf[kk] = total
        u = uniforms[i] * total
        k = 0
        while cdf[k] < u:
            k += 1
        z[i] = k
        n_dk[d, k] += 1.0
        n_kw[k, w] += 1.0
        n_k[k] += 1.0


@njit(cache=True)
def _fold_sweep(doc_of, word_of, z, n_dk, phi, alpha, uniforms):
    K = n_dk.shape[1]
    cdf = np.empty(K)
    for i in range(doc_of.shape[0]):
        d = doc_of[i]
        w = word_of[i]
        k = z[i]
        n_dk[d, k] -= 1.0
        total = 0.0
        for kk in range(K):
            total += (n_dk[d, kk] + alpha) * phi[kk, w]
            cdf[kk] = total
        u = uniforms[i] * total
        k = 0
        while cdf[k] < u:
            k += 1
        z[i] = k
        n_dk[d, k] += 1.0


def _encode(corpus: Corpus, vocabulary: dict[str, int]):
    """Flatten a corpus to (doc index, word id) arrays, skipping OOV lemmas."""
    doc_of: list[int] = []
    word_of: list[int] = []
    for d, doc in enumerate(corpus.documents):
        for tok in doc.tokens:
            w = vocabulary.get(tok.lemma)
            if w is not None:
                doc_of.append(d)
                word_of.append(w)
    return (
        np.asarray(doc_of, dtype=np.int32),
        np.asarray(word_of, dtype=np.int32),
    )


class GibbsLda(BaseEstimator):
    """Collapsed-Gibbs LDA over a preprocessed :class:`Corpus`.

    Parameters
    ----------
    n_topics : K, number of topics.
    alpha : symmetric document-topic prior; None means 50/K.
    beta : symmetric topic-word prior.
    iterations, burnin, thin : Gibbs sweeps, discarded sweeps, and the
        stride at which post-burnin proportion snapshots are saved as draws.
    seed : RNG seed; fixes assignments, phi and theta bit-for-bit.
    infer_iterations, infer_burnin : sweeps used by :meth:`transform` when
        folding unseen documents into the fitted topics.
    """

    def __init__(
        self,
        n_topics: int = 3,
        alpha: float | None = None,
        beta: float = 0.01,
        iterations: int = 2000,
        burnin: int = 1000,
        thin: int = 50,
        seed: int = 0,
        infer_iterations: int = 400,
        infer_burnin: int = 200,
    ):
        self.n_topics = n_topics
        self.alpha = alpha
        self.beta = beta
        self.iterations = iterations
        self.burnin = burnin
        self.thin = thin
        self.seed = seed
        self.infer_iterations = infer_iterations
        self.infer_burnin = infer_burnin

    # -- config --------------------------------------------------------------

    def _validate(self) -> tuple[float, float]:
        if self.n_topics < 1:
            raise InvalidConfig(f"n_topics must be >= 1, got {self.n_topics}")
        alpha = 50.0 / self.n_topics if self.alpha is None else float(self.alpha)
        beta = float(self.beta)
        if alpha <= 0 or beta <= 0:
            raise InvalidConfig("alpha and beta must be > 0")
        if not 0 <= self.burnin < self.iterations:
            raise InvalidConfig("burnin must satisfy 0 <= burnin < iterations")
        if self.thin < 1:
            raise InvalidConfig("thin must be >= 1")
        return alpha, beta

    # -- fitting ---------------------------------------------------------------

    def fit(self, X: Corpus, y=None) -> "GibbsLda":
        alpha, beta = self._validate()
        if len(X.documents) == 0:
            raise EmptyCorpus("no documents to fit")
        vocabulary = X.vocabulary
        if not vocabulary:
            raise EmptyCorpus("empty vocabulary")

        K = self.n_topics
        V = len(vocabulary)
        D = len(X.documents)
        doc_of, word_of = _encode(X, vocabulary)
        n_tokens = doc_of.shape[0]
        if n_tokens == 0:
            raise EmptyCorpus("no tokens to fit")

        rng = np.random.default_rng(self.seed)
        z = rng.integers(0, K, size=n_tokens, dtype=np.int32)
        n_dk = np.zeros((D, K))
        n_kw = np.zeros((K, V))
        n_k = np.zeros(K)
        np.add.at(n_dk, (doc_of, z), 1.0)
        np.add.at(n_kw, (z, word_of), 1.0)
        np.add.at(n_k, z, 1.0)

        acc_dk = np.zeros((D, K))
        acc_kw = np.zeros((K, V))
        draws: list[np.ndarray] = []
        kept = 0
        for sweep in range(1, self.iterations + 1):
            _gibbs_sweep(doc_of, word_of, z, n_dk, n_kw, n_k, alpha, beta,
                         rng.random(n_tokens))
            if sweep > self.burnin:
                acc_dk += n_dk
                acc_kw += n_kw
                kept += 1
                if (sweep - self.burnin) % self.thin == 0:
                    snap = n_dk + alpha
                    draws.append(snap / snap.sum(axis=1, keepdims=True))

        theta = acc_dk / kept + alpha
        theta /= theta.sum(axis=1, keepdims=True)
        phi = acc_kw / kept + beta
        phi /= phi.sum(axis=1, keepdims=True)

        self.alpha_ = alpha
        self.beta_ = beta
        self.vocabulary_ = tuple(sorted(vocabulary, key=vocabulary.get))
        self.word_counts_ = np.array(
            [X.lemma_counts[lemma] for lemma in self.vocabulary_], dtype=np.int64
        )
        self.doc_ids_ = tuple(str(doc.id) for doc in X.documents)
        self.phi_ = phi
        self.theta_ = theta
        self.draws_ = np.stack(draws) if draws else np.empty((0, D, K))
        self.assignments_ = tuple(
            np.array(z[doc_of == d], dtype=np.int32) for d in range(D)
        )
        self.labels_: tuple[str, ...] | None = None
        return self

    # -- inference on new documents -------------------------------------------

    def transform(self, X: Corpus) -> np.ndarray:
        """Document-topic proportions for ``X`` under the fitted topics.

        Out-of-vocabulary lemmas are ignored; documents with no known lemma
        get the uniform prior proportions.
        """
        self._check_fitted()
        vocab = {lemma: i for i, lemma in enumerate(self.vocabulary_)}
        doc_of, word_of = _encode(X, vocab)
        D = len(X.documents)
        K = self.n_topics
        rng = np.random.default_rng([self.seed, 1])
        n_dk = np.zeros((D, K))
        if doc_of.shape[0]:
            z = rng.integers(0, K, size=doc_of.shape[0], dtype=np.int32)
            np.add.at(n_dk, (doc_of, z), 1.0)
            acc = np.zeros((D, K))
            for sweep in range(1, self.infer_iterations + 1):
                _fold_sweep(doc_of, word_of, z, n_dk, self.phi_, self.alpha_,
                            rng.random(doc_of.shape[0]))
                if sweep > self.infer_burnin:
                    acc += n_dk
            theta = acc / max(self.infer_iterations - self.infer_burnin, 1) + self.alpha_
        else:
            theta = np.full((D, K), self.alpha_)
        return theta / theta.sum(axis=1, keepdims=True)

    def fit_transform(self, X: Corpus, y=None) -> np.ndarray:
        return self.fit(X).theta_

    def _check_fitted(self) -> None:
        if not hasattr(self, "phi_"):
            raise EmptyCorpus("model is not fitted")

    @property
    def k(self) -> int:
        return self.n_topics


# --- rankings ---------------------------------------------------------------


def frex_scores(model: GibbsLda, weight: float = FREX_WEIGHT) -> np.ndarray:
    """FREX word scores per topic: harmonic mean of the within-topic ECDF of
    exclusivity (phi normalized over topics) and of frequency (phi)."""
    phi = model.phi_
    excl = phi / phi.sum(axis=0, keepdims=True)
    K, V = phi.shape
    out = np.empty_like(phi)
    for k in range(K):
        e_rank = _ecdf(excl[k])
        f_rank = _ecdf(phi[k])
        out[k] = 1.0 / (weight / e_rank + (1.0 - weight) / f_rank)
    return out


def _ecdf(values: np.ndarray) -> np.ndarray:
    order = np.argsort(np.argsort(values, kind="stable"), kind="stable")
    return (order + 1) / values.shape[0]


def top_words(model: GibbsLda, topic: int, n: int = 10, weighting: str = "probability") -> list[str]:
    """Top-n lemmas of a topic by probability or FREX weight.

    Ties break by raw corpus frequency (descending), then lexicographically.
    ``n`` is clamped to the vocabulary size.
    """
    model._check_fitted()
    if not 0 <= topic < model.n_topics:
        raise TopicOutOfRange(f"topic {topic} not in [0, {model.n_topics})")
    if weighting == "probability":
        weights = model.phi_[topic]
    elif weighting == "frex":
        weights = frex_scores(model)[topic]
    else:
        raise ValueError(f"unknown weighting {weighting!r}")
    n = min(n, len(model.vocabulary_))
    ranked = sorted(
        range(len(model.vocabulary_)),
        key=lambda w: (-weights[w], -model.word_counts_[w], model.vocabulary_[w]),
    )
    return [model.vocabulary_[w] for w in ranked[:n]]


def permute_topics(model: GibbsLda, perm) -> GibbsLda:
    """Relabel topics by ``perm`` (new index i <- old index perm[i]).

    Returns a new fitted estimator with phi rows, theta columns, draws,
    assignments and labels permuted consistently.
    """
    model._check_fitted()
    perm = list(perm)
    if sorted(perm) != list(range(model.n_topics)):
        raise InvalidConfig(f"not a permutation of 0..{model.n_topics - 1}: {perm}")
    out = GibbsLda(**model.get_params())
    inverse = np.empty(model.n_topics, dtype=np.int32)
    for new, old in enumerate(perm):
        inverse[old] = new
    out.alpha_ = model.alpha_
    out.beta_ = model.beta_
    out.vocabulary_ = model.vocabulary_
    out.word_counts_ = model.word_counts_
    out.doc_ids_ = model.doc_ids_
    out.phi_ = model.phi_[perm]
    out.theta_ = model.theta_[:, perm]
    out.draws_ = model.draws_[:, :, perm] if model.draws_.size else model.draws_
    out.assignments_ = tuple(inverse[a] for a in model.assignments_)
    out.labels_ = None if model.labels_ is None else tuple(model.labels_[p] for p in perm)
    return out
