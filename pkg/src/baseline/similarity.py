"""
Order-blind bag-of-words cosine.

Ignores stopwords (connectives included) and word order, so "A but B" and
"B but A" score 1.0 although they argue toward opposite conclusions.
"""

import math
from collections import Counter
from collections.abc import Iterable

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..text.segmenter import tokenize

logger = structlog.get_logger()


class BowVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _positive_counts(self) -> "BowVector":
        if any(n <= 0 for n in self.counts.values()):
            raise ValueError("bag-of-words counts must be positive")
        return self

    @property
    def is_empty(self) -> bool:
        return not self.counts

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(n * n for n in self.counts.values()))


class Comparison(BaseModel):
    """Cosine between two sentences; `defined` is False if either vector is empty."""

    model_config = ConfigDict(frozen=True)

    cosine: float = Field(..., ge=0, le=1)
    defined: bool


def bow_vector(sentence_text: str, stopwords: Iterable[str] = frozenset()) -> BowVector:
    tokens = tokenize(sentence_text, stopwords)
    return BowVector(counts=dict(Counter(t.normalized for t in tokens if not t.is_stopword)))


def cosine(a: BowVector, b: BowVector) -> float:
    """Cosine over shared keys, in [0, 1]; 0.0 when either vector is empty."""
    if a.is_empty or b.is_empty:
        return 0.0
    dot = math.fsum(n * b.counts[word] for word, n in a.counts.items() if word in b.counts)
    # Clamp rounding overshoot so identical vectors stay at exactly 1.0.
    return min(1.0, dot / (a.norm * b.norm))


def compare_sentences(
    first: str, second: str, stopwords: Iterable[str] = frozenset()
) -> Comparison:
    stop = frozenset(stopwords)
    a, b = bow_vector(first, stop), bow_vector(second, stop)
    defined = not (a.is_empty or b.is_empty)
    if not defined:
        logger.debug("Cosine undefined: a sentence has no content words")
    return Comparison(cosine=cosine(a, b), defined=defined)
