import math

import numpy as np
import pytest

import synth
from corpuslab import GibbsLda
from corpuslab.errors import DegenerateDesign, ModelCorpusMismatch
from corpuslab.topics import (
    effects_to_csv,
    estimate_effect,
    permute_topics,
    prevalence_by,
    search_k,
)
from corpuslab.errors import InvalidConfig
from corpuslab.topics.evaluation import KSearchRow


def _fit(corpus, k, seed=0):
    return GibbsLda(n_topics=k, iterations=300, burnin=150, thin=15, seed=seed,
                    alpha=0.5, beta=0.1).fit(corpus)


@pytest.fixture(scope="module")
def planted():
    corpus, phi_true, theta_true, dom = synth.sample_corpus(
        n_docs=120, vocab_size=40, n_topics=2, doc_len=60, seed=21,
        phase_means=((0.8, 0.2), (0.2, 0.8)),
    )
    model = _fit(corpus, 2, seed=21)
    perm, _ = synth.match_topics(synth.expand_phi(model, 40), phi_true)
    return corpus, model, perm


def test_planted_phase_effect_sign(planted):
    corpus, model, perm = planted
    estimates = estimate_effect(model, corpus, "phase")
    by = {(e.topic, e.term): e for e in estimates}
    falling = by[(perm[0], "phase2")]  # planted 0.8 -> 0.2
    rising = by[(perm[1], "phase2")]
    assert falling.coefficient < 0 and falling.p_value < 0.01
    assert rising.coefficient > 0 and rising.p_value < 0.01


def test_effect_terms_per_topic(planted):
    corpus, model, _ = planted
    estimates = estimate_effect(model, corpus, "phase")
    terms = [(e.topic, e.term) for e in estimates]
    assert terms == [(0, "intercept"), (0, "phase2"), (1, "intercept"), (1, "phase2")]


def test_pvalue_consistent_with_normal(planted):
    corpus, model, _ = planted
    for e in estimate_effect(model, corpus, "phase"):
        if e.stderr > 0:
            z = abs(e.coefficient / e.stderr)
            assert e.p_value == pytest.approx(math.erfc(z / math.sqrt(2)), rel=1e-12)
        assert 0.0 <= e.p_value <= 1.0


def test_week_categorical_reference_week1(planted):
    corpus, model, _ = planted
    estimates = estimate_effect(model, corpus, "week")
    weeks = sorted({doc.id.week for doc in corpus.documents})
    assert 1 in weeks
    terms = {e.term for e in estimates if e.topic == 0}
    assert "intercept" in terms
    assert "week1" not in terms  # reference level folded into the intercept
    assert terms == {"intercept"} | {f"week{w}" for w in weeks if w != 1}


def test_degenerate_single_phase():
    corpus, *_ = synth.sample_corpus(n_docs=30, vocab_size=20, n_topics=2,
                                     doc_len=30, seed=3)
    from corpuslab import SubcorpusFilter, subcorpus

    phase1 = subcorpus(corpus, SubcorpusFilter(phase=1))
    model = _fit(phase1, 2, seed=3)
    with pytest.raises(DegenerateDesign):
        estimate_effect(model, phase1, "phase")


def test_mismatched_corpus_raises(planted):
    corpus, model, _ = planted
    other, *_ = synth.sample_corpus(n_docs=10, vocab_size=20, n_topics=2, doc_len=20, seed=99)
    with pytest.raises(ModelCorpusMismatch):
        estimate_effect(model, other, "phase")


def test_effect_equivariant_under_permutation(planted):
    corpus, model, _ = planted
    base = estimate_effect(model, corpus, "phase")
    permuted = estimate_effect(permute_topics(model, [1, 0]), corpus, "phase")
    by_base = {(e.topic, e.term): e for e in base}
    by_perm = {(e.topic, e.term): e for e in permuted}
    for (topic, term), e in by_base.items():
        mirrored = by_perm[(1 - topic, term)]
        assert mirrored.coefficient == pytest.approx(e.coefficient, abs=1e-12)
        assert mirrored.stderr == pytest.approx(e.stderr, abs=1e-12)


def test_effects_csv_header(planted):
    corpus, model, _ = planted
    text = effects_to_csv(estimate_effect(model, corpus, "phase"))
    assert text.splitlines()[0] == "topic,term,coef,se,p"
    assert len(text.strip().splitlines()) == 5


# --- prevalence_by -------------------------------------------------------------


def test_prevalence_rows_sum_to_one(planted):
    corpus, model, _ = planted
    for _, row in prevalence_by(model, corpus, "phase"):
        assert row.sum() == pytest.approx(1.0, abs=1e-9)
    for _, row in prevalence_by(model, corpus, "week"):
        assert row.sum() == pytest.approx(1.0, abs=1e-9)


def test_prevalence_single_group_equals_corpus_mean():
    corpus, *_ = synth.sample_corpus(n_docs=20, vocab_size=20, n_topics=2, doc_len=30, seed=8)
    from corpuslab import SubcorpusFilter, subcorpus

    phase1 = subcorpus(corpus, SubcorpusFilter(phase=1))
    model = _fit(phase1, 2, seed=8)
    rows = prevalence_by(model, phase1, "phase")
    assert len(rows) == 1
    assert np.allclose(rows[0][1], model.theta_.mean(axis=0))


def test_prevalence_k1_all_ones(planted):
    corpus, *_ = synth.sample_corpus(n_docs=20, vocab_size=15, n_topics=2, doc_len=20, seed=2)
    model = GibbsLda(n_topics=1, iterations=40, burnin=20, seed=2).fit(corpus)
    for _, row in prevalence_by(model, corpus, "week"):
        assert np.allclose(row, [1.0])


def test_prevalence_reflects_planted_shift():
    # disjoint topic vocabularies keep the fitted proportions unbiased
    corpus, phi_true, _, _ = synth.sample_corpus(
        n_docs=120, vocab_size=40, n_topics=2, doc_len=60, seed=22,
        phase_means=((0.8, 0.2), (0.2, 0.8)), disjoint_topics=True,
    )
    model = _fit(corpus, 2, seed=22)
    perm, _ = synth.match_topics(synth.expand_phi(model, 40), phi_true)
    rows = dict(prevalence_by(model, corpus, "phase"))
    assert rows[1][perm[0]] == pytest.approx(0.8, abs=0.05)
    assert rows[2][perm[0]] == pytest.approx(0.2, abs=0.05)


# --- search_k -------------------------------------------------------------------


def test_search_k_single_row():
    corpus, *_ = synth.sample_corpus(n_docs=30, vocab_size=20, n_topics=2, doc_len=30, seed=5)
    rows = search_k(corpus, [1], GibbsLda(iterations=60, burnin=30, thin=10, seed=5, alpha=0.5))
    assert len(rows) == 1 and isinstance(rows[0], KSearchRow) and rows[0].k == 1
    assert math.isfinite(rows[0].held_out_log_lik)


def test_search_k_empty_candidates():
    corpus, *_ = synth.sample_corpus(n_docs=10, vocab_size=10, n_topics=2, doc_len=20, seed=5)
    with pytest.raises(InvalidConfig):
        search_k(corpus, [])


def test_search_k_prefers_true_k():
    corpus, *_ = synth.sample_corpus(n_docs=150, vocab_size=60, n_topics=3, doc_len=60, seed=6)
    rows = search_k(
        corpus, [1, 3], GibbsLda(iterations=400, burnin=200, thin=20, seed=6,
                                 alpha=0.5, beta=0.1)
    )
    ll = {r.k: r.held_out_log_lik for r in rows}
    assert ll[3] > ll[1]


def test_search_k_deterministic():
    corpus, *_ = synth.sample_corpus(n_docs=40, vocab_size=20, n_topics=2, doc_len=30, seed=7)
    template = GibbsLda(iterations=80, burnin=40, thin=10, seed=7, alpha=0.5)
    a = search_k(corpus, [2], template)
    b = search_k(corpus, [2], template)
    assert a == b
