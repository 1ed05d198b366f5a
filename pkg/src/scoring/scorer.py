"""Sentence scoring, Score(S) = C_w * W_w, and ranking."""

import math
from collections import Counter
from collections.abc import Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..orientation.engine import SentenceAnnotation
from ..text.models import Sentence

NEUTRAL_WEIGHT = 1.0


class SentenceScore(BaseModel):
    model_config = ConfigDict(frozen=True)

    sentence_index: int = Field(..., ge=0)
    keyword_weight: float = Field(..., ge=0)  # W_w
    connective_weight: float = Field(..., gt=0)  # C_w
    score: float = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_product(self) -> "SentenceScore":
        if self.score != self.connective_weight * self.keyword_weight:
            raise ValueError("score must equal connective_weight * keyword_weight")
        return self


def keyword_weight(sentence: Sentence, keywords: Mapping[str, float]) -> float:
    """Sum of weight(w) * count(w in sentence) over keywords.

    math.fsum rounds the sum exactly once, so the order of terms is irrelevant.
    """
    counts = Counter(sentence.content_words)
    return math.fsum(keywords[word] * n for word, n in counts.items() if word in keywords)


def connective_weight(annotation: SentenceAnnotation) -> float:
    """Largest weight among matched connectives; never below the neutral 1.0."""
    weights = [match.entry.weight for match in annotation.all_matches]
    return max([NEUTRAL_WEIGHT, *weights])


def score_sentence(
    sentence: Sentence,
    keywords: Mapping[str, float],
    annotation: SentenceAnnotation,
) -> SentenceScore:
    if annotation.sentence_index != sentence.index:
        raise ValueError(
            f"annotation for sentence {annotation.sentence_index} "
            f"given for sentence {sentence.index}"
        )
    w_w = keyword_weight(sentence, keywords)
    c_w = connective_weight(annotation)
    return SentenceScore(
        sentence_index=sentence.index,
        keyword_weight=w_w,
        connective_weight=c_w,
        score=c_w * w_w,
    )


def rank(scores: Sequence[SentenceScore]) -> list[int]:
    """Sentence indices by descending score, ties in document order."""
    ordered = sorted(scores, key=lambda s: (-s.score, s.sentence_index))
    return [s.sentence_index for s in ordered]
