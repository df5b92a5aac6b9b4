from .ids import MONTHS, DocumentId, parse_document_id
from .ingest import ingest_conllu, ingest_raw, read_manifest, tokenize_text
from .io import load_corpus, save_corpus
from .model import Corpus, Document, SubcorpusFilter, Token, UNKNOWN_POS, subcorpus
from .preprocess import PreprocessConfig, load_stoplist, preprocess

__all__ = [
    "MONTHS",
    "DocumentId",
    "parse_document_id",
    "ingest_conllu",
    "ingest_raw",
    "read_manifest",
    "tokenize_text",
    "load_corpus",
    "save_corpus",
    "Corpus",
    "Document",
    "SubcorpusFilter",
    "Token",
    "UNKNOWN_POS",
    "subcorpus",
    "PreprocessConfig",
    "load_stoplist",
    "preprocess",
]
