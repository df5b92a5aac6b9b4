"""Frequency statistics, logDice association scoring, collocations and
word sketches.

Counting semantics: fPair is the number of *disjoint co-occurrence events* —
a maximum matching between the head lemma's token instances and the collocate
lemma's token instances over the co-occurrence edges (window proximity or a
dependency arc). Each token instance therefore participates in at most one
counted event per pair, which guarantees fPair <= min(fHead, fColl) and
logDice <= 14 for every input, including degenerate ones like a collocate
repeated inside one window. On ordinary text this coincides with plain pair
counting.

Marginal frequencies (fHead, fColl) are corpus-wide lemma counts over the
queried view, matched case-insensitively.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum

from .corpus.model import Corpus
from .errors import EmptySubcorpus, InvalidCounts, RelationsUnavailable

LOGDICE_MAX = 14.0
DEFAULT_WINDOW = 5
DEFAULT_MAX_PER_RELATION = 10

MODIFIER_DEPRELS = ("amod",)
SUBJECT_DEPRELS = ("nsubj",)
OBJECT_DEPRELS = ("obj", "dobj")
VERB_POS = ("VERB",)


class Relation(str, Enum):
    MODIFIER = "modifier"
    SUBJECT_OF = "subject_of"
    OBJECT_OF = "object_of"
    WINDOW = "window"

    @property
    def directional(self) -> bool:
        """Dependency relations are directional; the window relation is symmetric."""
        return self is not Relation.WINDOW


DEPENDENCY_RELATIONS = (Relation.MODIFIER, Relation.SUBJECT_OF, Relation.OBJECT_OF)


def round_half_up(value: float, digits: int = 2) -> float:
    """Display rounding (half away from zero), e.g. 348.335 -> 348.34."""
    q = Decimal(1).scaleb(-digits)
    return float(Decimal(str(value)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class FreqReport:
    lemma: str
    hits: int
    pmw: float  # per million words, display-rounded to 2 decimals


@dataclass(frozen=True)
class Collocation:
    head: str
    collocate: str
    relation: Relation
    f_head: int
    f_coll: int
    f_pair: int
    logdice: float


@dataclass(frozen=True)
class WordSketch:
    head: str
    per_relation: dict[Relation, tuple[Collocation, ...]]


@dataclass(frozen=True)
class SketchDiff:
    head: str
    relation: Relation
    collocate: str
    score_a: float | None
    score_b: float | None

    @property
    def delta(self) -> float | None:
        """score_a - score_b; None when the collocate is absent on either side."""
        if self.score_a is None or self.score_b is None:
            return None
        return self.score_a - self.score_b


def freq(view: Corpus, lemma: str) -> FreqReport:
    """Lemma hits and per-million-words rate in a (sub)corpus view."""
    if view.token_count == 0:
        raise EmptySubcorpus("frequency on an empty view is undefined")
    hits = view.folded_count(lemma)
    pmw = round_half_up(hits * 1_000_000 / view.token_count) if hits else 0.0
    return FreqReport(lemma=lemma.casefold(), hits=hits, pmw=pmw)


def logdice(f_head: int, f_coll: int, f_pair: int) -> float:
    """14 + log2(2·fPair / (fHead + fColl)); theoretical maximum 14."""
    if f_pair < 1:
        raise InvalidCounts(f"f_pair must be >= 1, got {f_pair}")
    if f_pair > f_head or f_pair > f_coll:
        raise InvalidCounts(
            f"f_pair={f_pair} exceeds a marginal (f_head={f_head}, f_coll={f_coll})"
        )
    return 14.0 + math.log2(2.0 * f_pair / (f_head + f_coll))


# --- co-occurrence event counting -------------------------------------------


def _greedy_window_matching(heads: list[int], colls: list[int], window: int) -> int:
    """Maximum matching between two sorted position lists under |a-b| <= window.

    Two-pointer greedy is optimal for this interval structure.
    """
    i = j = matched = 0
    while i < len(heads) and j < len(colls):
        if abs(heads[i] - colls[j]) <= window:
            matched += 1
            i += 1
            j += 1
        elif colls[j] < heads[i] - window:
            j += 1
        else:
            i += 1
    return matched


def _window_pair_counts(
    view: Corpus, head: str, window: int, stopwords: frozenset[str]
) -> dict[str, int]:
    head_folded = head.casefold()
    counts: dict[str, int] = {}
    for doc in view.documents:
        for sent in doc.sentences():
            head_positions = [t.offset for t in sent if t.lemma.casefold() == head_folded]
            if not head_positions:
                continue
            by_lemma: dict[str, list[int]] = {}
            for t in sent:
                lemma = t.lemma.casefold()
                if lemma == head_folded or not t.is_word or lemma in stopwords:
                    continue
                by_lemma.setdefault(lemma, []).append(t.offset)
            for lemma, positions in by_lemma.items():
                n = _greedy_window_matching(head_positions, positions, window)
                if n:
                    counts[lemma] = counts.get(lemma, 0) + n
    return counts


def _dependency_pair_counts(
    view: Corpus, head: str, relation: Relation, modifier_deprels=MODIFIER_DEPRELS
) -> dict[str, int]:
    """Count disjoint (governor instance, dependent instance) arcs per collocate.

    For MODIFIER the governor is the queried head word and the collocate is
    the modifier child; for SUBJECT_OF/OBJECT_OF the queried head word is the
    child of a verb and the collocate is the verb. Each dependent has exactly
    one governor, so deduplicating by governor instance realizes the maximum
    matching exactly.
    """
    head_folded = head.casefold()
    counts: dict[str, int] = {}
    for doc in view.documents:
        for sent in doc.sentences():
            # seen: (collocate lemma) -> set of governor positions used
            seen: dict[str, set[int]] = {}
            for t in sent:
                if t.head is None or t.head == 0 or t.deprel is None:
                    continue
                governor = sent[t.head - 1]
                if relation is Relation.MODIFIER:
                    if (
                        t.deprel in modifier_deprels
                        and governor.lemma.casefold() == head_folded
                    ):
                        seen.setdefault(t.lemma.casefold(), set()).add(governor.offset)
                elif relation is Relation.SUBJECT_OF:
                    if (
                        t.deprel in SUBJECT_DEPRELS
                        and t.lemma.casefold() == head_folded
                        and governor.pos in VERB_POS
                    ):
                        seen.setdefault(governor.lemma.casefold(), set()).add(governor.offset)
                elif relation is Relation.OBJECT_OF:
                    if (
                        t.deprel in OBJECT_DEPRELS
                        and t.lemma.casefold() == head_folded
                        and governor.pos in VERB_POS
                    ):
                        seen.setdefault(governor.lemma.casefold(), set()).add(governor.offset)
            for lemma, governors in seen.items():
                counts[lemma] = counts.get(lemma, 0) + len(governors)
    return counts


def collocations(
    view: Corpus,
    head: str,
    relation: Relation = Relation.WINDOW,
    min_pair: int = 1,
    window: int = DEFAULT_WINDOW,
    stopwords: frozenset[str] = frozenset(),
    modifier_deprels: tuple[str, ...] = MODIFIER_DEPRELS,
) -> list[Collocation]:
    """Ranked collocations of a head lemma under one relation.

    Sorted by logDice descending, ties by fPair descending then collocate
    lexicographic. Dependency relations require CoNLL-U-ingested tokens.
    """
    relation = Relation(relation)
    if relation.directional and not view.has_dependencies:
        raise RelationsUnavailable(
            f"{relation.value} collocations need dependency annotation; ingest CoNLL-U input"
        )
    f_head = view.folded_count(head)
    if f_head == 0:
        return []
    if relation is Relation.WINDOW:
        pair_counts = _window_pair_counts(view, head, window, stopwords)
    else:
        pair_counts = _dependency_pair_counts(view, head, relation, modifier_deprels)
    out = []
    for lemma, f_pair in pair_counts.items():
        if f_pair < min_pair:
            continue
        f_coll = view.folded_count(lemma)
        out.append(
            Collocation(
                head=head.casefold(),
                collocate=lemma,
                relation=relation,
                f_head=f_head,
                f_coll=f_coll,
                f_pair=f_pair,
                logdice=logdice(f_head, f_coll, f_pair),
            )
        )
    out.sort(key=lambda c: (-c.logdice, -c.f_pair, c.collocate))
    return out


def word_sketch(
    view: Corpus,
    head: str,
    max_per_relation: int = DEFAULT_MAX_PER_RELATION,
    min_score: float | None = None,
    modifier_deprels: tuple[str, ...] = MODIFIER_DEPRELS,
) -> WordSketch:
    """One-page collocate summary grouped by grammatical relation.

    Each relation keeps at most ``max_per_relation`` collocates (truncation
    happens before the ``min_score`` cutoff, mirroring the plotting workflow
    of capping list length first, then thresholding scores).
    """
    if not view.has_dependencies:
        raise RelationsUnavailable("word sketches need dependency annotation")
    per_relation: dict[Relation, tuple[Collocation, ...]] = {}
    for relation in DEPENDENCY_RELATIONS:
        ranked = collocations(
            view, head, relation, modifier_deprels=modifier_deprels
        )[:max_per_relation]
        if min_score is not None:
            ranked = [c for c in ranked if c.logdice >= min_score]
        per_relation[relation] = tuple(ranked)
    return WordSketch(head=head.casefold(), per_relation=per_relation)


def sketch_diff(
    view_a: Corpus,
    view_b: Corpus,
    head: str,
    max_per_relation: int = DEFAULT_MAX_PER_RELATION,
) -> list[SketchDiff]:
    """Contrast one lemma's sketches across two subcorpora.

    Entries are the per-relation union of both sketches' collocates, ordered
    by (relation, collocate) so the ordering is invariant under swapping the
    views; deltas are antisymmetric under the swap.
    """
    if view_a.token_count == 0 or view_b.token_count == 0:
        raise EmptySubcorpus("sketch difference needs two non-empty views")
    sketch_a = word_sketch(view_a, head, max_per_relation=max_per_relation)
    sketch_b = word_sketch(view_b, head, max_per_relation=max_per_relation)
    out: list[SketchDiff] = []
    for relation in DEPENDENCY_RELATIONS:
        scores_a = {c.collocate: c.logdice for c in sketch_a.per_relation[relation]}
        scores_b = {c.collocate: c.logdice for c in sketch_b.per_relation[relation]}
        for collocate in sorted(set(scores_a) | set(scores_b)):
            out.append(
                SketchDiff(
                    head=head.casefold(),
                    relation=relation,
                    collocate=collocate,
                    score_a=scores_a.get(collocate),
                    score_b=scores_b.get(collocate),
                )
            )
    return out


# --- emission ----------------------------------------------------------------

CSV_HEADER = "head,relation,collocate,f_head,f_coll,f_pair,logdice"


def collocations_to_csv(rows: list[Collocation]) -> str:
    lines = [CSV_HEADER]
    for c in rows:
        lines.append(
            f"{c.head},{c.relation.value},{c.collocate},{c.f_head},{c.f_coll},"
            f"{c.f_pair},{round_half_up(c.logdice):.2f}"
        )
    return "\n".join(lines) + "\n"


def sketch_to_graph(sketch: WordSketch) -> dict:
    """Graph JSON for rendering: text size grows with the association score."""
    relations = {}
    for relation, collocs in sketch.per_relation.items():
        relations[relation.value] = [
            {
                "collocate": c.collocate,
                "f_head": c.f_head,
                "f_coll": c.f_coll,
                "f_pair": c.f_pair,
                "logdice": round_half_up(c.logdice),
                "size": round_half_up(10.0 + 2.0 * max(c.logdice, 0.0), 1),
            }
            for c in collocs
        ]
    return {"lemma": sketch.head, "relations": relations}


def sketch_graph_json(sketch: WordSketch) -> str:
    return json.dumps(sketch_to_graph(sketch), ensure_ascii=False, sort_keys=True)
