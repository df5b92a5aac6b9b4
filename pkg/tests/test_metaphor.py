import json

import pytest

from conftest import make_corpus, make_doc
from corpuslab.errors import MalformedLexicon, ModelCorpusMismatch, OverlappingDomains
from corpuslab.metaphor import (
    candidates_to_csv,
    default_lexicons,
    flag_candidates,
    load_lexicons,
    topic_domain_matrix,
)


def test_default_pack_has_four_domains():
    pack = default_lexicons()
    assert {lex.domain for lex in pack} == {
        "NATURAL_DISASTER", "BUILDING", "MACHINE", "LIVING_ORGANISM",
    }
    by_domain = {lex.domain: lex.entries for lex in pack}
    assert "tsunami" in by_domain["NATURAL_DISASTER"]
    assert "motore" in by_domain["MACHINE"]
    assert "fondamenta" in by_domain["BUILDING"]
    assert "ibernazione" in by_domain["LIVING_ORGANISM"]
    assert not any("guerra" in entries for entries in by_domain.values())  # no war domain


def test_load_lexicons_overlapping_domains(tmp_path):
    path = tmp_path / "pack.json"
    path.write_text(json.dumps({"MACHINE": ["motore"], "BUILDING": ["motore"]}), "utf-8")
    with pytest.raises(OverlappingDomains):
        load_lexicons(path)


def test_load_lexicons_empty_domain(tmp_path):
    path = tmp_path / "pack.json"
    path.write_text(json.dumps({"MACHINE": []}), "utf-8")
    with pytest.raises(MalformedLexicon):
        load_lexicons(path)


def test_flag_candidates_engine_sentence():
    doc = make_doc(
        "phase1_week1_april_28",
        [["le", "imprese", ",", "motore", "della", "ricerca"]],
    )
    candidates = flag_candidates(make_corpus(doc), ["imprese"], default_lexicons())
    assert len(candidates) == 1
    c = candidates[0]
    assert c.source_domain == "MACHINE" and c.trigger == "motore" and c.target == "imprese"


def test_flag_candidates_no_trigger_empty():
    doc = make_doc("phase1_week1_march_1", [["la", "crisi", "passa"]])
    assert flag_candidates(make_corpus(doc), ["crisi"], default_lexicons()) == []


def test_flag_candidates_pair_combinatorics():
    doc = make_doc(
        "phase1_week1_march_1",
        [["economia", "società", "motore", "carburante"]],
    )
    candidates = flag_candidates(
        make_corpus(doc), ["economia", "società"], default_lexicons()
    )
    assert len(candidates) == 4  # 2 targets x 2 triggers
    # deterministic ordering by (doc, sent, target offset, trigger offset)
    key = [(c.target_offset, c.trigger_offset) for c in candidates]
    assert key == sorted(key)


def test_flag_candidates_window_scope():
    doc = make_doc(
        "phase1_week1_march_1",
        [["economia", "x", "x", "x", "x", "x", "x", "motore"]],
    )
    corpus = make_corpus(doc)
    lexicons = default_lexicons()
    assert flag_candidates(corpus, ["economia"], lexicons, scope="window", window=3) == []
    within = flag_candidates(corpus, ["economia"], lexicons, scope="window", window=7)
    assert len(within) == 1
    sentence_scope = flag_candidates(corpus, ["economia"], lexicons, scope="sentence")
    assert len(sentence_scope) == 1


def test_scope_monotonicity():
    doc = make_doc(
        "phase1_week1_march_1",
        [["economia", "a", "motore", "b", "c", "d", "carburante"]],
    )
    corpus = make_corpus(doc)
    lexicons = default_lexicons()

    def key_set(cands):
        return {(c.target_offset, c.trigger_offset) for c in cands}

    small = key_set(flag_candidates(corpus, ["economia"], lexicons, "window", window=2))
    mid = key_set(flag_candidates(corpus, ["economia"], lexicons, "window", window=6))
    full = key_set(flag_candidates(corpus, ["economia"], lexicons, "sentence"))
    assert small <= mid <= full
    assert small != full


def test_self_pair_excluded():
    # 'crollo' is both a potential target and a NATURAL_DISASTER trigger
    doc = make_doc("phase1_week1_march_1", [["crollo", "rovinoso"]])
    candidates = flag_candidates(make_corpus(doc), ["crollo"], default_lexicons())
    assert candidates == []


def test_trigger_in_exactly_one_domain():
    pack = default_lexicons()
    doc = make_doc("phase1_week1_march_1", [["economia", "motore", "tsunami", "ferita"]])
    for c in flag_candidates(make_corpus(doc), ["economia"], pack):
        owners = [lex.domain for lex in pack if c.trigger in lex.entries]
        assert owners == [c.source_domain]


def test_matrix_marginals_and_csv(fitted_two_topic):
    model, corpus = fitted_two_topic
    candidates = flag_candidates(corpus, ["economia"], default_lexicons())
    matrix = topic_domain_matrix(candidates, model, corpus)
    assert matrix.total == len(candidates)
    assert sum(n for row in matrix.counts.values() for n in row.values()) == matrix.total
    text = candidates_to_csv(candidates)
    assert text.splitlines()[0] == "doc,sent,target,domain,trigger"
    assert len(text.strip().splitlines()) == 1 + len(candidates)


def test_matrix_mismatch_raises(fitted_two_topic):
    model, _ = fitted_two_topic
    other = make_corpus(make_doc("phase2_week12_may_20", [["economia", "motore"]]))
    candidates = flag_candidates(other, ["economia"], default_lexicons())
    with pytest.raises(ModelCorpusMismatch):
        topic_domain_matrix(candidates, model)
