import json

import jsonschema
import pytest

import synth
from corpuslab import GibbsLda
from corpuslab.cli import main as cli_main
from corpuslab.corpus.io import save_corpus
from corpuslab.schemas import (
    CORPUS_SCHEMA,
    MODEL_SCHEMA,
    REPORT_FILE_SCHEMAS,
    SKETCH_GRAPH_SCHEMA,
)
from corpuslab.topics.io import save_model


@pytest.fixture(scope="module")
def emitted(tmp_path_factory):
    """One pipeline run: corpus + model containers and a report directory."""
    tmp = tmp_path_factory.mktemp("schemas")
    corpus, *_ = synth.sample_corpus(n_docs=40, vocab_size=20, n_topics=2,
                                     doc_len=30, seed=41)
    corpus_path = tmp / "corpus.json"
    save_corpus(corpus, corpus_path)
    model = GibbsLda(n_topics=2, iterations=80, burnin=40, thin=10, seed=41,
                     alpha=0.5, beta=0.1).fit(corpus)
    model.labels_ = ("uno", "due")
    model_path = tmp / "model.json"
    save_model(model, model_path)
    out = tmp / "report"
    assert cli_main(["report", "--corpus", str(corpus_path), "--model", str(model_path),
                     "--out", str(out)]) == 0
    return tmp


def _load(path):
    return json.loads(path.read_text("utf-8"))


def test_corpus_container_validates(emitted):
    jsonschema.validate(_load(emitted / "corpus.json"), CORPUS_SCHEMA)


def test_model_container_validates(emitted):
    jsonschema.validate(_load(emitted / "model.json"), MODEL_SCHEMA)


def test_report_files_validate(emitted):
    for name, schema in REPORT_FILE_SCHEMAS.items():
        jsonschema.validate(_load(emitted / "report" / name), schema)


def test_sketch_graph_validates(tagged_corpus):
    from corpuslab.colloc import sketch_to_graph, word_sketch

    graph = sketch_to_graph(word_sketch(tagged_corpus, "economia"))
    jsonschema.validate(graph, SKETCH_GRAPH_SCHEMA)


def test_schema_rejects_corrupted_container(emitted):
    data = _load(emitted / "corpus.json")
    data["version"] = 99
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(data, CORPUS_SCHEMA)
