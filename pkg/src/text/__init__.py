"""Pre-processing: segmentation, tokenization and clause splitting."""

from .clauses import ClauseSplit, split_on_connective
from .models import ClauseRole, Document, Sentence, Token
from .segmenter import load_stopwords, parse_stopwords, segment_sentences, tokenize

__all__ = [
    "ClauseRole",
    "ClauseSplit",
    "Document",
    "Sentence",
    "Token",
    "load_stopwords",
    "parse_stopwords",
    "segment_sentences",
    "split_on_connective",
    "tokenize",
]
