"""corpuslab: a corpus-analytics workbench.

Covariate-aware topic modeling over metadata-tagged document collections,
logDice collocations and word sketches, KWIC concordancing, and
lexicon-based metaphor-candidate flagging — with a CLI (``corpuslab``) and a
read-only HTTP query service.
"""

__version__ = "0.1.0"

from . import colloc, concord, metaphor
from .corpus import (
    Corpus,
    Document,
    DocumentId,
    PreprocessConfig,
    SubcorpusFilter,
    Token,
    ingest_conllu,
    ingest_raw,
    load_corpus,
    load_stoplist,
    parse_document_id,
    preprocess,
    save_corpus,
    subcorpus,
)
from .topics import GibbsLda, estimate_effect, prevalence_by, search_k, top_words

__all__ = [
    "__version__",
    "colloc",
    "concord",
    "metaphor",
    "Corpus",
    "Document",
    "DocumentId",
    "PreprocessConfig",
    "SubcorpusFilter",
    "Token",
    "ingest_conllu",
    "ingest_raw",
    "load_corpus",
    "load_stoplist",
    "parse_document_id",
    "preprocess",
    "save_corpus",
    "subcorpus",
    "GibbsLda",
    "estimate_effect",
    "prevalence_by",
    "search_k",
    "top_words",
]
