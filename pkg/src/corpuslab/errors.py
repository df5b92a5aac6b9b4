"""Exception hierarchy.

``CorpusLabError`` is the base for all data-level errors (the CLI maps it to
exit code 2 and the HTTP service to a structured error envelope). Usage
mistakes raise ``UsageError`` (CLI exit code 1).
"""


class CorpusLabError(Exception):
    """Base class for data-level errors."""


class UsageError(CorpusLabError):
    """Command line / query string misuse."""


# --- corpus ----------------------------------------------------------------

class MalformedId(CorpusLabError):
    """Document identifier does not match phase{P}_week{W}_{month}_{D}[letter]."""


class InvalidPhase(CorpusLabError):
    """Document identifier names a phase outside {1, 2}."""


class MissingMetadata(CorpusLabError):
    """A document has no resolvable identifier (no parseable filename, no manifest row)."""


class EmptyDocument(CorpusLabError):
    """Document contained no tokens at ingestion time."""


class ParseError(CorpusLabError):
    """Malformed CoNLL-U (or manifest) input."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)


class StemmingUnsupported(CorpusLabError):
    """Stemming was requested; the pipeline deliberately does not stem."""


# --- topics ----------------------------------------------------------------

class EmptyCorpus(CorpusLabError):
    """Model fitting requires a corpus with documents and a non-empty vocabulary."""


class InvalidConfig(CorpusLabError):
    """Model hyperparameters violate their constraints."""


class TopicOutOfRange(CorpusLabError):
    """Topic index not in [0, K)."""


class DegenerateDesign(CorpusLabError):
    """Covariate design matrix is constant or rank deficient."""


class ModelCorpusMismatch(CorpusLabError):
    """Model and corpus disagree on document identity."""


# --- colloc ----------------------------------------------------------------

class InvalidCounts(CorpusLabError):
    """logDice inputs violate fPair >= 1 and fPair <= min(fHead, fColl)."""


class RelationsUnavailable(CorpusLabError):
    """Dependency-based collocations requested on a corpus without annotations."""


class EmptySubcorpus(CorpusLabError):
    """Operation requires a non-empty (sub)corpus view."""


# --- concord ---------------------------------------------------------------

class InvalidPattern(CorpusLabError):
    """Token pattern string could not be parsed."""


# --- metaphor --------------------------------------------------------------

class MalformedLexicon(CorpusLabError):
    """Lexicon file is structurally invalid (e.g. empty domain)."""


class OverlappingDomains(CorpusLabError):
    """A lemma is assigned to more than one domain of the same lexicon pack."""


# --- reporting -------------------------------------------------------------

class MissingModel(CorpusLabError):
    """A fitted topic model is required but was not provided."""
