"""Source-domain lexicons and metaphor-candidate flagging.

Candidates are retrieval flags for human review, not metaphor judgments: a
candidate records a target keyword co-occurring with a source-domain trigger
within a sentence or token window. Literal uses will false-positive by
design; the analyst decides.

The default Italian pack covers four source domains (natural disasters,
buildings, machines, living organisms). The war domain is deliberately not
shipped; users can add their own domains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .corpus.ids import DocumentId
from .corpus.model import Corpus
from .errors import MalformedLexicon, ModelCorpusMismatch, OverlappingDomains

DEFAULT_SCOPE = "sentence"


@dataclass(frozen=True)
class Lexicon:
    domain: str
    entries: frozenset[str]
    language: str = "it"


@dataclass(frozen=True)
class ConceptualMapping:
    """A target-domain/source-domain pairing, with unverified MetaNet metadata."""

    label: str
    topics: tuple[str, ...]
    source_domain: str
    in_metanet: bool


# Hierarchical mapping table shipped as data; in_metanet is stored, not checked.
DEFAULT_MAPPINGS = (
    ConceptualMapping("CRISES ARE NATURAL FORCES", ("health", "society", "economy"),
                      "NATURAL_DISASTER", True),
    ConceptualMapping("COMPLEX SYSTEMS ARE STRUCTURED OBJECTS (BUILDING)",
                      ("economy", "society"), "BUILDING", True),
    ConceptualMapping("COMPLEX SYSTEMS ARE STRUCTURED OBJECTS (MACHINE)",
                      ("economy", "society"), "MACHINE", True),
    ConceptualMapping("COMPLEX SYSTEMS ARE LIVING ORGANISMS",
                      ("health", "economy", "society"), "LIVING_ORGANISM", True),
)


@dataclass(frozen=True)
class MetaphorCandidate:
    doc_id: DocumentId
    doc_index: int
    sent: int
    target: str
    source_domain: str
    trigger: str
    target_offset: int
    trigger_offset: int
    snippet: tuple[str, ...]


@dataclass(frozen=True)
class TopicDomainMatrix:
    """candidate counts per (dominant topic, source domain)."""

    counts: dict[int, dict[str, int]]
    pmw: dict[int, dict[str, float]]
    total: int


def _validate_pack(domains: dict[str, list[str]], origin: str) -> None:
    if not isinstance(domains, dict) or not domains:
        raise MalformedLexicon(f"{origin}: expected a non-empty {{domain: [lemmas]}} object")
    seen: dict[str, str] = {}
    for domain, entries in domains.items():
        if not isinstance(entries, list) or not entries:
            raise MalformedLexicon(f"{origin}: domain {domain!r} has no entries")
        for lemma in entries:
            folded = str(lemma).casefold()
            if folded in seen and seen[folded] != domain:
                raise OverlappingDomains(
                    f"{origin}: {lemma!r} appears in both {seen[folded]!r} and {domain!r}"
                )
            seen[folded] = domain


def load_lexicons(path: str | Path, language: str = "it") -> tuple[Lexicon, ...]:
    """Load a ``{domain: [lemmas]}`` JSON lexicon pack."""
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        data = json.load(fh)
    _validate_pack(data, str(path))
    return tuple(
        Lexicon(domain=domain, entries=frozenset(str(e).casefold() for e in entries),
                language=language)
        for domain, entries in data.items()
    )


def default_lexicons(language: str = "it") -> tuple[Lexicon, ...]:
    """The packaged default pack (4 source domains)."""
    data = json.loads(
        resources.files("corpuslab.data").joinpath("lexicon_default_it.json").read_text("utf-8")
    )
    _validate_pack(data, "lexicon_default_it.json")
    return tuple(
        Lexicon(domain=domain, entries=frozenset(entries), language=language)
        for domain, entries in data.items()
    )


def flag_candidates(
    view: Corpus,
    targets,
    lexicons: tuple[Lexicon, ...],
    scope: str = DEFAULT_SCOPE,
    window: int = 5,
) -> list[MetaphorCandidate]:
    """Flag every (target occurrence, trigger occurrence) pair in scope.

    ``scope`` is "sentence" or "window" (token distance <= ``window``, still
    sentence-bounded). Ordering is (doc, sent, target offset, trigger offset).
    """
    if scope not in ("sentence", "window"):
        raise ValueError(f"scope must be sentence|window, got {scope!r}")
    if not targets:
        raise ValueError("targets must be non-empty")
    target_set = frozenset(t.casefold() for t in targets)
    trigger_domain: dict[str, str] = {}
    for lex in lexicons:
        for entry in lex.entries:
            trigger_domain[entry] = lex.domain

    out: list[MetaphorCandidate] = []
    for d, doc in enumerate(view.documents):
        for sent in doc.sentences():
            target_toks = [t for t in sent if t.lemma.casefold() in target_set]
            if not target_toks:
                continue
            trigger_toks = [t for t in sent if t.lemma.casefold() in trigger_domain]
            if not trigger_toks:
                continue
            snippet = tuple(t.surface for t in sent)
            for target in target_toks:
                for trigger in trigger_toks:
                    if trigger.offset == target.offset:
                        continue
                    if scope == "window" and abs(trigger.offset - target.offset) > window:
                        continue
                    out.append(
                        MetaphorCandidate(
                            doc_id=doc.id,
                            doc_index=d,
                            sent=target.sent,
                            target=target.lemma.casefold(),
                            source_domain=trigger_domain[trigger.lemma.casefold()],
                            trigger=trigger.lemma.casefold(),
                            target_offset=target.offset,
                            trigger_offset=trigger.offset,
                            snippet=snippet,
                        )
                    )
    out.sort(key=lambda c: (c.doc_index, c.sent, c.target_offset, c.trigger_offset))
    return out


def topic_domain_matrix(
    candidates: list[MetaphorCandidate],
    model,
    corpus: Corpus | None = None,
) -> TopicDomainMatrix:
    """Attribute candidates to their document's dominant topic.

    Dominant topic = argmax of the document's fitted proportions (ties break
    to the lowest index). When ``corpus`` is given, cells also carry a
    per-million rate normalized by the token mass of documents sharing that
    dominant topic.
    """
    doc_row = {doc_id: i for i, doc_id in enumerate(model.doc_ids_)}
    theta = model.theta_
    counts: dict[int, dict[str, int]] = {}
    total = 0
    dominant_cache: dict[str, int] = {}
    for cand in candidates:
        key = str(cand.doc_id)
        if key not in doc_row:
            raise ModelCorpusMismatch(f"document {key} was not scored by the model")
        if key not in dominant_cache:
            dominant_cache[key] = int(np.argmax(theta[doc_row[key]]))
        topic = dominant_cache[key]
        counts.setdefault(topic, {})
        counts[topic][cand.source_domain] = counts[topic].get(cand.source_domain, 0) + 1
        total += 1

    pmw: dict[int, dict[str, float]] = {}
    if corpus is not None:
        by_id = {str(doc.id): len(doc) for doc in corpus.documents}
        mass: dict[int, int] = {}
        for doc_id, row in doc_row.items():
            if doc_id in by_id:
                topic = int(np.argmax(theta[row]))
                mass[topic] = mass.get(topic, 0) + by_id[doc_id]
        for topic, row in counts.items():
            denom = mass.get(topic, 0)
            pmw[topic] = {
                domain: (n * 1_000_000 / denom if denom else 0.0)
                for domain, n in row.items()
            }
    return TopicDomainMatrix(counts=counts, pmw=pmw, total=total)


def candidates_to_csv(candidates: list[MetaphorCandidate]) -> str:
    lines = ["doc,sent,target,domain,trigger"]
    for c in candidates:
        lines.append(f"{c.doc_id},{c.sent},{c.target},{c.source_domain},{c.trigger}")
    return "\n".join(lines) + "\n"
