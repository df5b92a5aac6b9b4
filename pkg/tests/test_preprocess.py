import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import make_corpus, make_doc
from corpuslab import Corpus, PreprocessConfig, preprocess
from corpuslab.corpus.preprocess import load_stoplist
from corpuslab.errors import StemmingUnsupported


def lemmas(corpus: Corpus) -> list[str]:
    return [t.lemma for doc in corpus.documents for t in doc.tokens]


def test_stoplist_removes_coronavirus():
    corpus = make_corpus(
        make_doc("phase1_week1_march_1", [["Coronavirus", "crisi", "crisi"]]),
    )
    cfg = PreprocessConfig(stoplist=frozenset({"coronavirus", "covid"}), drop_hapax=False)
    cleaned = preprocess(corpus, cfg)
    assert "coronavirus" not in cleaned.vocabulary
    assert "crisi" in cleaned.vocabulary


def test_punctuation_and_numbers_removed():
    corpus = make_corpus(
        make_doc("phase1_week1_march_1", [["crisi", ",", "2020", "crisi", "%", "covid-19"]]),
    )
    cleaned = preprocess(corpus, PreprocessConfig(drop_hapax=False))
    got = lemmas(cleaned)
    assert got == ["crisi", "crisi", "covid-19"]  # mixed alnum survives number filter


def test_hapax_dropped_after_other_filters():
    # 'tsunami' occurs once among surviving tokens -> hapax; 'ponte' too.
    corpus = make_corpus(
        make_doc("phase1_week1_march_1", [["crisi", "crisi", "tsunami"]]),
        make_doc("phase1_week1_march_2", [["crisi", "ponte"]]),
    )
    cleaned = preprocess(corpus, PreprocessConfig())
    assert set(cleaned.vocabulary) == {"crisi"}
    assert min(cleaned.lemma_counts.values()) >= 2


def test_hapax_counted_after_lowercase_merge():
    # lemma case variants merge before hapax counting, so Virus+virus = 2
    corpus = make_corpus(
        make_doc(
            "phase1_week1_march_1",
            [[("virus", "virus", "NOUN", 0, "root"), "crisi", "crisi"]],
        ),
        make_doc("phase1_week1_march_2", [[("Virus", "Virus", "NOUN", 0, "root")]]),
    )
    cleaned = preprocess(corpus, PreprocessConfig())
    assert cleaned.lemma_counts["virus"] == 2
    # without lowercasing the two case variants stay distinct singletons
    cleaned2 = preprocess(corpus, PreprocessConfig(lowercase=False))
    assert "virus" not in cleaned2.vocabulary
    assert "Virus" not in cleaned2.vocabulary


def test_empty_documents_dropped_with_warning(caplog):
    corpus = make_corpus(
        make_doc("phase1_week1_march_1", [["crisi", "crisi"]]),
        make_doc("phase1_week1_march_2", [[",", "!"]]),
    )
    with caplog.at_level(logging.WARNING):
        cleaned = preprocess(corpus, PreprocessConfig())
    assert len(cleaned.documents) == 1
    assert any("dropped" in r.message for r in caplog.records)


def test_stemming_rejected():
    corpus = make_corpus(make_doc("phase1_week1_march_1", [["crisi"]]))
    with pytest.raises(StemmingUnsupported):
        preprocess(corpus, PreprocessConfig(stem=True))


def test_idempotence_fixture():
    corpus = make_corpus(
        make_doc("phase1_week1_march_1", [["crisi", "crisi", "tsunami", ",", "7"]]),
        make_doc("phase1_week1_march_2", [["crisi", "ponte", "ponte"]]),
    )
    cfg = PreprocessConfig(stoplist=frozenset({"il"}))
    once = preprocess(corpus, cfg)
    twice = preprocess(once, cfg)
    assert once == twice


@given(
    docs=st.lists(
        st.lists(
            st.sampled_from(["crisi", "tsunami", "ponte", "il", ",", "42", "Motore"]),
            min_size=1,
            max_size=12,
        ),
        min_size=1,
        max_size=6,
    )
)
def test_idempotence_property(docs):
    corpus = make_corpus(
        *(
            make_doc(f"phase1_week1_march_{i % 28 + 1}", [words])
            for i, words in enumerate(docs)
        )
    )
    cfg = PreprocessConfig(stoplist=frozenset({"il"}))
    once = preprocess(corpus, cfg)
    assert preprocess(once, cfg) == once
    if once.lemma_counts:
        assert min(once.lemma_counts.values()) >= 2


def test_surface_preserved_lemma_lowercased():
    corpus = make_corpus(make_doc("phase1_week1_march_1", [["Crisi", "crisi"]]))
    cleaned = preprocess(corpus, PreprocessConfig())
    doc = cleaned.documents[0]
    assert [t.surface for t in doc.tokens] == ["Crisi", "crisi"]
    assert [t.lemma for t in doc.tokens] == ["crisi", "crisi"]


def test_offsets_reindexed_and_annotation_dropped(tagged_corpus):
    cleaned = preprocess(tagged_corpus, PreprocessConfig(drop_hapax=False))
    for doc in cleaned.documents:
        assert [t.offset for t in doc.tokens] == list(range(len(doc.tokens)))
        assert all(t.head is None and t.deprel is None for t in doc.tokens)
        assert any(t.pos != "UNKNOWN" for t in doc.tokens)  # POS kept


def test_load_stoplist(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("Coronavirus\ncovid\n\n  il  \n", "utf-8")
    assert load_stoplist(path) == frozenset({"coronavirus", "covid", "il"})
