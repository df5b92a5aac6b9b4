"""Core data model: tokens, documents, immutable corpora and subcorpus views.

A ``Corpus`` is an immutable sequence of documents plus lazily built indexes
(vocabulary, per-document frequencies, postings). Subcorpus views are plain
``Corpus`` instances sharing the underlying ``Document`` objects, so views are
cheap and safe for concurrent readers.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from .ids import DocumentId

UNKNOWN_POS = "UNKNOWN"


@dataclass(frozen=True, slots=True)
class Token:
    """One annotated token.

    ``head`` uses the CoNLL-U convention: 1-based index within the sentence,
    0 for the root, None when unannotated. ``offset`` is the token's position
    in the document; construction code keeps offsets equal to list indices.
    """

    surface: str
    lemma: str
    pos: str = UNKNOWN_POS
    head: int | None = None
    deprel: str | None = None
    sent: int = 0
    offset: int = 0

    @property
    def is_word(self) -> bool:
        """True when the lemma contains at least one letter."""
        return any(ch.isalpha() for ch in self.lemma)


@dataclass(frozen=True)
class Document:
    id: DocumentId
    tokens: tuple[Token, ...]
    source: str | None = None

    def __len__(self) -> int:
        return len(self.tokens)

    def sentences(self) -> list[list[Token]]:
        """Tokens grouped by sentence index (ascending)."""
        out: list[list[Token]] = []
        for tok in self.tokens:
            while len(out) <= tok.sent:
                out.append([])
            out[tok.sent].append(tok)
        return out


@dataclass(frozen=True)
class SubcorpusFilter:
    """Predicate over DocumentId fields.

    Constraints are conjunctive; ``invert`` selects the complement, which
    makes partition properties directly expressible:
    ``subcorpus(c, f)`` and ``subcorpus(c, f.complement())`` partition ``c``.
    """

    phase: int | None = None
    week: tuple[int, int] | None = None  # inclusive range
    month: str | None = None
    invert: bool = False

    def matches(self, doc_id: DocumentId) -> bool:
        ok = True
        if self.phase is not None:
            ok = ok and doc_id.phase == self.phase
        if self.week is not None:
            lo, hi = self.week
            ok = ok and lo <= doc_id.week <= hi
        if self.month is not None:
            ok = ok and doc_id.month == self.month
        return not ok if self.invert else ok

    def complement(self) -> "SubcorpusFilter":
        return SubcorpusFilter(self.phase, self.week, self.month, not self.invert)

    @classmethod
    def parse(cls, spec: str) -> "SubcorpusFilter":
        """Parse the ``key=value[,key=value]`` filter grammar.

        Keys: phase|week|month. week accepts ``N`` or ``A-B`` (inclusive).
        Raises ValueError on malformed input.
        """
        phase: int | None = None
        week: tuple[int, int] | None = None
        month: str | None = None
        spec = spec.strip()
        if not spec:
            return cls()
        for part in spec.split(","):
            if "=" not in part:
                raise ValueError(f"filter term {part!r} is not key=value")
            key, _, value = part.partition("=")
            key = key.strip().lower()
            value = value.strip().lower()
            if key == "phase":
                try:
                    phase = int(value)
                except ValueError:
                    raise ValueError(f"phase must be an integer, got {value!r}") from None
            elif key == "week":
                lo, _, hi = value.partition("-")
                try:
                    week = (int(lo), int(hi) if hi else int(lo))
                except ValueError:
                    raise ValueError(f"week must be N or A-B, got {value!r}") from None
            elif key == "month":
                if not value:
                    raise ValueError("month must be a month name")
                month = value
            else:
                raise ValueError(f"unknown filter key {key!r} (expected phase|week|month)")
        return cls(phase=phase, week=week, month=month)

    def __str__(self) -> str:
        parts = []
        if self.phase is not None:
            parts.append(f"phase={self.phase}")
        if self.week is not None:
            lo, hi = self.week
            parts.append(f"week={lo}" if lo == hi else f"week={lo}-{hi}")
        if self.month is not None:
            parts.append(f"month={self.month}")
        text = ",".join(parts)
        return f"!({text})" if self.invert else text


class Corpus:
    """Immutable document collection with lazy indexes.

    All index structures key on the exact lemma string; ``folded_variants``
    maps a casefolded lemma to its surface-case variants so queries can match
    case-insensitively without mutating the tokens.
    """

    def __init__(self, documents: Iterable[Document]):
        self._documents = tuple(documents)

    @property
    def documents(self) -> tuple[Document, ...]:
        return self._documents

    def __len__(self) -> int:
        return len(self._documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self._documents)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self._documents == other._documents

    def __hash__(self) -> int:  # documents tuple is hashable
        return hash(self._documents)

    @cached_property
    def token_count(self) -> int:
        return sum(len(d) for d in self._documents)

    @cached_property
    def lemma_counts(self) -> Counter:
        """Corpus-wide lemma frequencies (exact lemma strings)."""
        counts: Counter = Counter()
        for doc in self._documents:
            counts.update(tok.lemma for tok in doc.tokens)
        return counts

    @cached_property
    def vocabulary(self) -> dict[str, int]:
        """lemma -> integer id, assigned in sorted lemma order."""
        return {lemma: i for i, lemma in enumerate(sorted(self.lemma_counts))}

    @cached_property
    def frequency_index(self) -> dict[str, dict[int, int]]:
        """lemma -> {document index -> count}."""
        index: dict[str, dict[int, int]] = defaultdict(dict)
        for d, doc in enumerate(self._documents):
            for lemma, n in Counter(tok.lemma for tok in doc.tokens).items():
                index[lemma][d] = n
        return dict(index)

    @cached_property
    def postings(self) -> dict[str, tuple[tuple[int, int], ...]]:
        """lemma -> ((doc index, token offset), ...) in document order."""
        index: dict[str, list[tuple[int, int]]] = defaultdict(list)
        for d, doc in enumerate(self._documents):
            for tok in doc.tokens:
                index[tok.lemma].append((d, tok.offset))
        return {k: tuple(v) for k, v in index.items()}

    @cached_property
    def folded_variants(self) -> dict[str, tuple[str, ...]]:
        """casefolded lemma -> exact lemma variants present in the corpus."""
        index: dict[str, list[str]] = defaultdict(list)
        for lemma in sorted(self.lemma_counts):
            index[lemma.casefold()].append(lemma)
        return {k: tuple(v) for k, v in index.items()}

    @cached_property
    def has_dependencies(self) -> bool:
        return any(tok.deprel is not None for doc in self._documents for tok in doc.tokens)

    @cached_property
    def has_pos(self) -> bool:
        return any(tok.pos != UNKNOWN_POS for doc in self._documents for tok in doc.tokens)

    # -- casefolded query helpers ------------------------------------------

    def folded_count(self, lemma: str) -> int:
        """Total occurrences of a lemma, matched case-insensitively."""
        return sum(
            self.lemma_counts[v] for v in self.folded_variants.get(lemma.casefold(), ())
        )

    def folded_postings(self, lemma: str) -> list[tuple[int, int]]:
        """Occurrences of a lemma (case-insensitive), sorted by (doc, offset)."""
        hits: list[tuple[int, int]] = []
        for variant in self.folded_variants.get(lemma.casefold(), ()):
            hits.extend(self.postings[variant])
        hits.sort()
        return hits


def subcorpus(corpus: Corpus, f: SubcorpusFilter | Callable[[DocumentId], bool]) -> Corpus:
    """Filter a corpus by document metadata; the view shares token data.

    An empty view is permitted.
    """
    pred = f.matches if isinstance(f, SubcorpusFilter) else f
    return Corpus(doc for doc in corpus.documents if pred(doc.id))
