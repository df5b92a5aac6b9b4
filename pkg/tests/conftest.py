import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpuslab import Corpus, Document, Token, parse_document_id


def make_doc(doc_id: str, sentences, source=None) -> Document:
    """Build a Document from sentences of (surface, lemma, pos, head, deprel)
    or plain lemma strings (untagged, lemma = lowercased surface)."""
    tokens = []
    for sent_idx, sent in enumerate(sentences):
        for item in sent:
            if isinstance(item, str):
                tok = Token(surface=item, lemma=item.lower(), sent=sent_idx,
                            offset=len(tokens))
            else:
                surface, lemma, pos, head, deprel = item
                tok = Token(surface=surface, lemma=lemma, pos=pos, head=head,
                            deprel=deprel, sent=sent_idx, offset=len(tokens))
            tokens.append(tok)
    return Document(id=parse_document_id(doc_id), tokens=tuple(tokens), source=source)


def make_corpus(*docs) -> Corpus:
    return Corpus(docs)


@pytest.fixture
def tagged_corpus() -> Corpus:
    """Small dependency-annotated corpus (UD-style Italian)."""
    # "la crisi è uno tsunami" : tsunami is root, crisi its nsubj, è its cop
    copular = [
        ("La", "la", "DET", 2, "det"),
        ("crisi", "crisi", "NOUN", 5, "nsubj"),
        ("è", "essere", "AUX", 5, "cop"),
        ("uno", "uno", "DET", 5, "det"),
        ("tsunami", "tsunami", "NOUN", 0, "root"),
    ]
    # "l' economia italiana subisce il crollo" : modifier + subject-of + object-of
    s2 = [
        ("L'", "il", "DET", 2, "det"),
        ("economia", "economia", "NOUN", 4, "nsubj"),
        ("italiana", "italiano", "ADJ", 2, "amod"),
        ("subisce", "subire", "VERB", 0, "root"),
        ("il", "il", "DET", 6, "det"),
        ("crollo", "crollo", "NOUN", 4, "obj"),
    ]
    # "il governo sostiene l' economia malata"
    s3 = [
        ("Il", "il", "DET", 2, "det"),
        ("governo", "governo", "NOUN", 3, "nsubj"),
        ("sostiene", "sostenere", "VERB", 0, "root"),
        ("l'", "il", "DET", 5, "det"),
        ("economia", "economia", "NOUN", 3, "obj"),
        ("malata", "malato", "ADJ", 5, "amod"),
    ]
    # "l' economia italiana riparte" : second italiano amod of a second economia
    s4 = [
        ("L'", "il", "DET", 2, "det"),
        ("economia", "economia", "NOUN", 4, "nsubj"),
        ("italiana", "italiano", "ADJ", 2, "amod"),
        ("riparte", "ripartire", "VERB", 0, "root"),
    ]
    doc1 = make_doc("phase1_week1_february_27", [copular, s2])
    doc2 = make_doc("phase2_week10_may_4", [s3, s4])
    return Corpus([doc1, doc2])


@pytest.fixture(scope="session")
def fitted_two_topic():
    """A small fitted model plus its corpus; topic-0 docs carry MACHINE
    triggers next to 'economia', topic-1 docs are trigger-free."""
    import numpy as np

    from corpuslab import GibbsLda

    rng = np.random.default_rng(5)
    docs = []
    for d in range(30):
        if d % 2 == 0:
            words = list(rng.choice(["economia", "motore", "mercato", "impresa"], 20))
        else:
            words = list(rng.choice(["virus", "contagio", "ospedale", "medico"], 20))
        phase = 1 if d < 15 else 2
        week = 1 if phase == 1 else 10
        month = "march" if phase == 1 else "may"
        docs.append(make_doc(f"phase{phase}_week{week}_{month}_{d % 28 + 1}", [words]))
    corpus = Corpus(docs)
    model = GibbsLda(n_topics=2, iterations=150, burnin=75, thin=15, seed=3,
                     alpha=0.5, beta=0.1).fit(corpus)
    return model, corpus


@pytest.fixture
def plain_corpus() -> Corpus:
    """Untagged two-phase corpus for freq/kwic/subcorpus tests."""
    d1 = make_doc(
        "phase1_week1_february_27",
        [["Il", "tsunami", "continuo"], ["Un", "tsunami", "epidemico", "arriva"]],
    )
    d2 = make_doc(
        "phase1_week2_march_5b",
        [["La", "crisi", "è", "qui"]],
    )
    d3 = make_doc(
        "phase2_week10_may_4",
        [["Tsunami", "economico"], ["la", "crisi", "finanziaria"]],
    )
    return Corpus([d1, d2, d3])
