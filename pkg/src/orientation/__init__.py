"""Constraints generator: argumentative orientation of clauses and sentences."""

from .engine import (
    ClauseOrienter,
    ScaleTally,
    SentenceAnnotation,
    document_orientation,
    generate_constraints,
    orient_clause,
    orient_sentence,
)

__all__ = [
    "ClauseOrienter",
    "ScaleTally",
    "SentenceAnnotation",
    "document_orientation",
    "generate_constraints",
    "orient_clause",
    "orient_sentence",
]
