"""Word-sentence frequency matrix and keyword extraction."""

from collections import Counter
from collections.abc import Iterable

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..text.models import Document

logger = structlog.get_logger()


class WordSentenceMatrix(BaseModel):
    """Rows are content words (first-occurrence order), columns are sentences.

    Counts are stored sparsely: `counts[word][sentence_index]`, absent = 0.
    """

    model_config = ConfigDict(frozen=True)

    words: tuple[str, ...] = ()
    n_sentences: int = Field(default=0, ge=0)
    counts: dict[str, dict[int, int]] = Field(default_factory=dict)
    doc_freq: dict[str, int] = Field(default_factory=dict)

    def count(self, word: str, sentence_index: int) -> int:
        return self.counts.get(word, {}).get(sentence_index, 0)

    def row(self, word: str) -> list[int]:
        """Dense row for one word."""
        return [self.count(word, s) for s in range(self.n_sentences)]

    @property
    def max_doc_freq(self) -> int:
        return max(self.doc_freq.values(), default=0)


def build_matrix(doc: Document, stopwords: Iterable[str] = frozenset()) -> WordSentenceMatrix:
    """Count non-stopword normalized tokens per sentence.

    Tokens are already flagged at segmentation; `stopwords` additionally
    excludes words, so a matrix can be rebuilt under a different list.
    """
    extra = frozenset(stopwords)
    counts: dict[str, dict[int, int]] = {}
    for sentence in doc.sentences:
        column = Counter(word for word in sentence.content_words if word not in extra)
        for word, n in column.items():
            counts.setdefault(word, {})[sentence.index] = n

    doc_freq = {word: sum(row.values()) for word, row in counts.items()}
    logger.debug(f"Built matrix: {len(counts)} words x {len(doc.sentences)} sentences")
    return WordSentenceMatrix(
        words=tuple(counts),
        n_sentences=len(doc.sentences),
        counts=counts,
        doc_freq=doc_freq,
    )


def extract_keywords(matrix: WordSentenceMatrix, alpha: float = 0.5) -> dict[str, float]:
    """Words whose frequency reaches `alpha` times the maximum, weighted freq / max.

    alpha=1.0 keeps only the maximum-frequency words.
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    top = matrix.max_doc_freq
    if top == 0:
        return {}
    threshold = alpha * top
    return {
        word: matrix.doc_freq[word] / top
        for word in matrix.words
        if matrix.doc_freq[word] >= threshold
    }
