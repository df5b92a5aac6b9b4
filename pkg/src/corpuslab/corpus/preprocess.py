"""Vocabulary cleaning ahead of topic modeling.

Removal order: stoplist, punctuation, numbers, then hapax legomena computed
on what survives. Hapax frequencies are counted on lemmas over the whole
corpus. Stemming is rejected outright.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, replace

from ..errors import StemmingUnsupported
from .model import Corpus, Document, Token

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreprocessConfig:
    stoplist: frozenset[str] = frozenset()
    drop_punctuation: bool = True
    drop_numbers: bool = True
    drop_hapax: bool = True
    lowercase: bool = True
    stem: bool = False


def load_stoplist(path) -> frozenset[str]:
    """One lemma per line, UTF-8; blank lines ignored, entries lowercased."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip().lower() for line in fh if line.strip())


def _is_punctuation(lemma: str) -> bool:
    return not any(ch.isalnum() for ch in lemma)


def _is_number(lemma: str) -> bool:
    return any(ch.isdigit() for ch in lemma) and not any(ch.isalpha() for ch in lemma)


def preprocess(corpus: Corpus, cfg: PreprocessConfig = PreprocessConfig()) -> Corpus:
    """Apply the cleaning pipeline; idempotent for a fixed config.

    Surviving tokens are re-offset; HEAD/DEPREL are dropped because token
    removal invalidates within-sentence head indices (the cleaned corpus is
    a modeling view; concordances and sketches use the ingested corpus).
    Documents emptied by filtering are dropped with a warning.
    """
    if cfg.stem:
        raise StemmingUnsupported("stemming is deliberately unsupported")

    stoplist = frozenset(s.lower() for s in cfg.stoplist)

    def keep(lemma: str) -> bool:
        if lemma.lower() in stoplist:
            return False
        if cfg.drop_punctuation and _is_punctuation(lemma):
            return False
        if cfg.drop_numbers and _is_number(lemma):
            return False
        return True

    surviving: list[list[Token]] = []
    counts: Counter = Counter()
    for doc in corpus.documents:
        kept = []
        for tok in doc.tokens:
            lemma = tok.lemma.lower() if cfg.lowercase else tok.lemma
            if keep(lemma):
                kept.append(replace(tok, lemma=lemma, head=None, deprel=None))
                counts[lemma] += 1
        surviving.append(kept)

    hapax = {lemma for lemma, n in counts.items() if n == 1} if cfg.drop_hapax else set()

    documents = []
    for doc, kept in zip(corpus.documents, surviving):
        tokens = tuple(
            replace(tok, offset=i)
            for i, tok in enumerate(t for t in kept if t.lemma not in hapax)
        )
        if not tokens:
            log.warning("document %s empty after preprocessing; dropped", doc.id)
            continue
        documents.append(Document(id=doc.id, tokens=tokens, source=doc.source))
    return Corpus(documents)
