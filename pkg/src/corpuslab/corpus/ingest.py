"""Ingestion of raw-text and CoNLL-U documents.

Raw text is segmented with a simple regex tokenizer (words, standalone
punctuation marks and numerals each become their own token) and sentence
breaks are placed after terminal punctuation. Raw-text tokens carry
lemma = lowercased surface and no POS/dependency annotation, which degrades
relation-based collocations but keeps the rest of the pipeline available.

CoNLL-U input is parsed per the public format: 10 tab-separated columns,
blank-line sentence breaks, ``# newdoc id = ...`` document boundaries,
multiword-token range lines and empty nodes skipped.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

from ..errors import EmptyDocument, MalformedId, MissingMetadata, ParseError
from .ids import DocumentId, parse_document_id
from .model import Corpus, Document, Token, UNKNOWN_POS

_TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)
_SENT_END = frozenset(".!?…")


def tokenize_text(text: str) -> list[list[str]]:
    """Split raw text into sentences of surface tokens."""
    sentences: list[list[str]] = []
    current: list[str] = []
    for piece in _TOKEN_RE.findall(text):
        current.append(piece)
        if piece in _SENT_END:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def read_manifest(path: str | Path) -> dict[str, tuple[str, str | None]]:
    """Read a ``file,id,source`` CSV manifest; returns file -> (id, source)."""
    path = Path(path)
    rows: dict[str, tuple[str, str | None]] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "file" not in reader.fieldnames or "id" not in reader.fieldnames:
            raise ParseError("manifest must have a 'file,id,source' header", path=str(path))
        for row in reader:
            source = (row.get("source") or "").strip() or None
            rows[row["file"].strip()] = (row["id"].strip(), source)
    return rows


def _resolve_id(
    path: Path,
    manifest: dict[str, tuple[str, str | None]] | None,
    fallback: str | None = None,
) -> tuple[DocumentId, str | None]:
    """Resolve a document's id and source.

    Precedence: manifest row > explicit in-file id (CoNLL-U newdoc) > filename
    stem. Explicit ids with an invalid phase propagate InvalidPhase; files with
    no parseable id anywhere raise MissingMetadata.
    """
    if manifest is not None:
        row = manifest.get(path.name) or manifest.get(str(path))
        if row is not None:
            raw, source = row
            return parse_document_id(raw), source
    for candidate in (fallback, path.stem):
        if candidate is None:
            continue
        try:
            return parse_document_id(candidate), None
        except MalformedId:
            continue
    raise MissingMetadata(f"no manifest row and no parseable id for {path.name!r}")


def ingest_raw(
    paths: list[str | Path] | tuple[str | Path, ...],
    manifest: dict[str, tuple[str, str | None]] | None = None,
) -> Corpus:
    """Ingest UTF-8 text files into an untagged corpus.

    Document order follows sorted file paths so ingestion is deterministic
    for a given file set.
    """
    documents = []
    for path in sorted(Path(p) for p in paths):
        doc_id, source = _resolve_id(path, manifest)
        text = path.read_text(encoding="utf-8")
        tokens: list[Token] = []
        for sent_idx, sentence in enumerate(tokenize_text(text)):
            for surface in sentence:
                tokens.append(
                    Token(
                        surface=surface,
                        lemma=surface.lower(),
                        pos=UNKNOWN_POS,
                        sent=sent_idx,
                        offset=len(tokens),
                    )
                )
        if not tokens:
            raise EmptyDocument(f"{path.name}: no tokens")
        documents.append(Document(id=doc_id, tokens=tuple(tokens), source=source))
    return Corpus(documents)


# --- CoNLL-U ---------------------------------------------------------------

_NEWDOC_RE = re.compile(r"#\s*newdoc\s+id\s*=\s*(\S+)")


def _finish_sentence(
    rows: list[tuple[str, str, str, int | None, str | None]],
    tokens: list[Token],
    sent_idx: int,
    path: str,
    line_no: int,
) -> None:
    n = len(rows)
    for surface, lemma, upos, head, deprel in rows:
        if head is not None and not 0 <= head <= n:
            raise ParseError(f"HEAD {head} outside sentence of {n} tokens", path=path, line=line_no)
        tokens.append(
            Token(
                surface=surface,
                lemma=lemma,
                pos=upos,
                head=head,
                deprel=deprel,
                sent=sent_idx,
                offset=len(tokens),
            )
        )


def ingest_conllu(
    paths: list[str | Path] | tuple[str | Path, ...],
    manifest: dict[str, tuple[str, str | None]] | None = None,
) -> Corpus:
    """Ingest CoNLL-U files; tokens carry lemma, UPOS, HEAD and DEPREL.

    ``# newdoc id = X`` starts a new document (id X unless overridden by a
    manifest row); a file without newdoc markers is one document identified
    by its filename or manifest row.
    """
    documents = []
    for path in sorted(Path(p) for p in paths):
        docs_in_file = _parse_conllu_file(path)
        if not docs_in_file:
            raise EmptyDocument(f"{path.name}: no tokens")
        for fallback_id, tokens in docs_in_file:
            if not tokens:
                raise EmptyDocument(f"{path.name}: document {fallback_id or ''} has no tokens")
            doc_id, source = _resolve_id(path, manifest, fallback=fallback_id)
            documents.append(Document(id=doc_id, tokens=tuple(tokens), source=source))
    return Corpus(documents)


def _parse_conllu_file(path: Path) -> list[tuple[str | None, list[Token]]]:
    docs: list[tuple[str | None, list[Token]]] = []
    tokens: list[Token] = []
    rows: list[tuple[str, str, str, int | None, str | None]] = []
    sent_idx = 0
    newdoc_id: str | None = None
    started = False

    def flush_sentence(line_no: int) -> None:
        nonlocal rows, sent_idx
        if rows:
            _finish_sentence(rows, tokens, sent_idx, str(path), line_no)
            sent_idx += 1
            rows = []

    def flush_document() -> None:
        nonlocal tokens, sent_idx
        if started:
            docs.append((newdoc_id, tokens))
        tokens = []
        sent_idx = 0

    with path.open(encoding="utf-8") as fh:
        line_no = 0
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                flush_sentence(line_no)
                continue
            if line.startswith("#"):
                m = _NEWDOC_RE.match(line)
                if m:
                    flush_sentence(line_no)
                    flush_document()
                    newdoc_id = m.group(1)
                    started = True
                continue
            started = True
            cols = line.split("\t")
            if len(cols) != 10:
                raise ParseError(f"expected 10 columns, got {len(cols)}", path=str(path), line=line_no)
            tok_id = cols[0]
            if "-" in tok_id or "." in tok_id:
                # multiword-token ranges and empty nodes carry no tree position
                continue
            try:
                int(tok_id)
            except ValueError:
                raise ParseError(f"bad token id {tok_id!r}", path=str(path), line=line_no) from None
            head: int | None
            if cols[6] == "_":
                head = None
            else:
                try:
                    head = int(cols[6])
                except ValueError:
                    raise ParseError(f"bad HEAD {cols[6]!r}", path=str(path), line=line_no) from None
            deprel = cols[7] if cols[7] != "_" else None
            upos = cols[3] if cols[3] != "_" else UNKNOWN_POS
            lemma = cols[2] if cols[2] != "_" else cols[1]
            rows.append((cols[1], lemma, upos, head, deprel))
        flush_sentence(line_no)
        flush_document()
    return docs
