"""KWIC concordancing and token-pattern search.

Pattern syntax is a sequence of slot strings::

    [lemma="crisi"] [lemma="essere|be"] [pos="DET"]? [lemma="tsunami"]

Each slot constrains lemma and/or POS (``|`` separates alternatives), ``[]``
is a wildcard, and a trailing ``?`` marks the slot optional. Matching is
sentence-bounded, leftmost-longest and non-overlapping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .corpus.ids import DocumentId
from .corpus.model import Corpus, Token
from .errors import InvalidPattern

DEFAULT_CONTEXT = 8
DEFAULT_COPULAS = ("essere", "be")
DEFAULT_DETERMINERS = (
    "il", "lo", "la", "i", "gli", "le", "l'", "un", "uno", "una", "un'",
    "the", "a", "an",
)

_SLOT_RE = re.compile(r"\[([^\]]*)\](\?)?")
_ATTR_RE = re.compile(r'(lemma|pos)\s*=\s*"([^"]*)"')


@dataclass(frozen=True)
class Slot:
    lemmas: frozenset[str] | None = None  # casefolded alternatives
    pos: frozenset[str] | None = None  # uppercased alternatives
    optional: bool = False

    def matches(self, token: Token) -> bool:
        if self.lemmas is not None and token.lemma.casefold() not in self.lemmas:
            return False
        if self.pos is not None and token.pos.upper() not in self.pos:
            return False
        return True


@dataclass(frozen=True)
class TokenPattern:
    slots: tuple[Slot, ...]

    def __post_init__(self) -> None:
        if not self.slots:
            raise InvalidPattern("pattern must have at least one slot")

    @classmethod
    def parse(cls, text: str) -> "TokenPattern":
        """Parse the ``[lemma="..." pos="..."]`` slot string format."""
        slots: list[Slot] = []
        rest = text.strip()
        if not rest:
            raise InvalidPattern("empty pattern")
        while rest:
            m = _SLOT_RE.match(rest)
            if m is None:
                raise InvalidPattern(f"cannot parse pattern near {rest[:30]!r}")
            body, opt = m.group(1), m.group(2)
            lemmas: frozenset[str] | None = None
            pos: frozenset[str] | None = None
            for attr in _ATTR_RE.finditer(body):
                values = [v for v in attr.group(2).split("|") if v]
                if not values:
                    raise InvalidPattern(f"empty value in slot {body!r}")
                if attr.group(1) == "lemma":
                    lemmas = frozenset(v.casefold() for v in values)
                else:
                    pos = frozenset(v.upper() for v in values)
            if _ATTR_RE.sub("", body).strip():
                raise InvalidPattern(f"unrecognized slot attributes in {body!r}")
            slots.append(Slot(lemmas=lemmas, pos=pos, optional=bool(opt)))
            rest = rest[m.end():].lstrip()
        return cls(slots=tuple(slots))

    def match_at(self, sent: list[Token], start: int) -> int | None:
        """Length of the longest match starting at ``start``, or None.

        Optional slots are tried included-first, which realizes the
        leftmost-longest rule.
        """

        def advance(slot_idx: int, pos: int) -> int | None:
            if slot_idx == len(self.slots):
                return pos - start
            slot = self.slots[slot_idx]
            if pos < len(sent) and slot.matches(sent[pos]):
                length = advance(slot_idx + 1, pos + 1)
                if length is not None:
                    return length
            if slot.optional:
                return advance(slot_idx + 1, pos)
            return None

        return advance(0, start)


@dataclass(frozen=True)
class ConcordanceLine:
    doc_id: DocumentId
    doc_index: int
    sent: int
    offset: int  # document offset of the first node token
    left: tuple[str, ...]
    node: tuple[str, ...]
    right: tuple[str, ...]
    context_width: int


@dataclass(frozen=True)
class KwicPage:
    total: int
    page: int
    page_size: int
    lines: tuple[ConcordanceLine, ...]


def _find_matches(view: Corpus, query, by: str) -> list[tuple[int, int, int]]:
    """(doc index, start offset, length) triples for a query.

    Lemma/surface queries match single tokens case-insensitively; pattern
    matches are sentence-bounded, leftmost-longest, non-overlapping.
    """
    matches: list[tuple[int, int, int]] = []
    if isinstance(query, TokenPattern):
        for d, doc in enumerate(view.documents):
            for sent in doc.sentences():
                i = 0
                while i < len(sent):
                    length = query.match_at(sent, i)
                    if length is not None and length > 0:
                        matches.append((d, sent[i].offset, length))
                        i += length
                    else:
                        i += 1
        return matches
    needle = str(query).casefold()
    for d, doc in enumerate(view.documents):
        for tok in doc.tokens:
            value = tok.lemma if by == "lemma" else tok.surface
            if value.casefold() == needle:
                matches.append((d, tok.offset, 1))
    return matches


def kwic(
    view: Corpus,
    query,
    by: str = "lemma",
    context_width: int = DEFAULT_CONTEXT,
    sort: str = "position",
    page: int = 1,
    page_size: int = 50,
) -> KwicPage:
    """Key-word-in-context search with stable pagination.

    ``query`` is a lemma/surface string (per ``by``) or a TokenPattern.
    ``sort`` is one of position|left|right; sorting is total (ties fall back
    to corpus position), so pages partition the full result set.
    """
    if context_width < 0:
        raise ValueError("context_width must be >= 0")
    if page < 1 or page_size < 1:
        raise ValueError("page and page_size must be >= 1")
    if sort not in ("position", "left", "right"):
        raise ValueError(f"unknown sort {sort!r}")

    lines = []
    for d, start, length in _find_matches(view, query, by):
        doc = view.documents[d]
        toks = doc.tokens
        left = toks[max(0, start - context_width):start]
        node = toks[start:start + length]
        right = toks[start + length:start + length + context_width]
        lines.append(
            ConcordanceLine(
                doc_id=doc.id,
                doc_index=d,
                sent=node[0].sent,
                offset=start,
                left=tuple(t.surface for t in left),
                node=tuple(t.surface for t in node),
                right=tuple(t.surface for t in right),
                context_width=context_width,
            )
        )

    def position_key(line: ConcordanceLine):
        return (line.doc_index, line.offset)

    if sort == "left":
        # nearest left word first, i.e. compare mirrored left context
        key = lambda l: (tuple(w.casefold() for w in reversed(l.left)), position_key(l))
    elif sort == "right":
        key = lambda l: (tuple(w.casefold() for w in l.right), position_key(l))
    else:
        key = position_key
    lines.sort(key=key)

    lo = (page - 1) * page_size
    return KwicPage(
        total=len(lines),
        page=page,
        page_size=page_size,
        lines=tuple(lines[lo:lo + page_size]),
    )


def copular_pattern(
    view: Corpus,
    y: str,
    copulas: tuple[str, ...] = DEFAULT_COPULAS,
    determiners: tuple[str, ...] = DEFAULT_DETERMINERS,
) -> list[tuple[str, int]]:
    """Instances of the "X is (a) Y" frame, aggregated over X.

    On POS-tagged corpora X must be a NOUN/PROPN and the optional determiner
    slot matches by POS; on untagged text the matching degrades to lemmas
    only (X is any word token, determiners come from a closed list). Returns
    (X lemma, count) sorted by count descending, then lexicographically.
    """
    tagged = view.has_pos
    if tagged:
        slots = (
            Slot(pos=frozenset({"NOUN", "PROPN"})),
            Slot(lemmas=frozenset(c.casefold() for c in copulas)),
            Slot(pos=frozenset({"DET"}), optional=True),
            Slot(lemmas=frozenset({y.casefold()})),
        )
    else:
        slots = (
            Slot(),
            Slot(lemmas=frozenset(c.casefold() for c in copulas)),
            Slot(lemmas=frozenset(d.casefold() for d in determiners), optional=True),
            Slot(lemmas=frozenset({y.casefold()})),
        )
    pattern = TokenPattern(slots=slots)
    counts: dict[str, int] = {}
    for d, doc in enumerate(view.documents):
        for sent in doc.sentences():
            i = 0
            while i < len(sent):
                length = pattern.match_at(sent, i)
                if length is not None and length > 0:
                    x = sent[i]
                    if x.is_word:
                        lemma = x.lemma.casefold()
                        counts[lemma] = counts.get(lemma, 0) + 1
                    i += length
                else:
                    i += 1
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def kwic_to_tsv(lines) -> str:
    """TSV export: doc_id, left, node, right (space-joined token surfaces)."""
    out = ["doc_id\tleft\tnode\tright"]
    for line in lines:
        out.append(
            "\t".join(
                (str(line.doc_id), " ".join(line.left), " ".join(line.node), " ".join(line.right))
            )
        )
    return "\n".join(out) + "\n"
