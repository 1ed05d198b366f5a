"""Keyword and connective based sentence scoring."""

from .matrix import WordSentenceMatrix, build_matrix, extract_keywords
from .scorer import SentenceScore, connective_weight, keyword_weight, rank, score_sentence

__all__ = [
    "SentenceScore",
    "WordSentenceMatrix",
    "build_matrix",
    "connective_weight",
    "extract_keywords",
    "keyword_weight",
    "rank",
    "score_sentence",
]
