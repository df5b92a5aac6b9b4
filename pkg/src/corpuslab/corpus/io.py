"""Versioned JSON serialization of corpora.

The container stores one token as ``[surface, lemma, pos, head, deprel]``
nested in per-sentence lists, which keeps files compact and round-trips all
annotation. Serialization is deterministic (sorted keys, fixed separators),
so identical corpora produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import ParseError
from .ids import parse_document_id
from .model import Corpus, Document, Token, UNKNOWN_POS

FORMAT = "corpuslab-corpus"
VERSION = 1


def corpus_to_dict(corpus: Corpus) -> dict:
    docs = []
    for doc in corpus.documents:
        sentences: list[list[list]] = []
        for sent in doc.sentences():
            sentences.append(
                [[t.surface, t.lemma, t.pos, t.head, t.deprel] for t in sent]
            )
        docs.append({"id": str(doc.id), "source": doc.source, "sentences": sentences})
    return {"format": FORMAT, "version": VERSION, "documents": docs}


def corpus_from_dict(data: dict, origin: str = "<dict>") -> Corpus:
    if data.get("format") != FORMAT:
        raise ParseError(f"not a {FORMAT} container", path=origin)
    if data.get("version") != VERSION:
        raise ParseError(f"unsupported container version {data.get('version')!r}", path=origin)
    documents = []
    for entry in data["documents"]:
        doc_id = parse_document_id(entry["id"])
        tokens: list[Token] = []
        for sent_idx, sent in enumerate(entry["sentences"]):
            for surface, lemma, pos, head, deprel in sent:
                tokens.append(
                    Token(
                        surface=surface,
                        lemma=lemma,
                        pos=pos or UNKNOWN_POS,
                        head=head,
                        deprel=deprel,
                        sent=sent_idx,
                        offset=len(tokens),
                    )
                )
        documents.append(Document(id=doc_id, tokens=tuple(tokens), source=entry.get("source")))
    return Corpus(documents)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    text = json.dumps(corpus_to_dict(corpus), ensure_ascii=False, sort_keys=True,
                      separators=(",", ":"))
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_corpus(path: str | Path) -> Corpus:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return corpus_from_dict(json.load(fh), origin=str(path))
