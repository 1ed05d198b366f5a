"""
Summary generator: the end-to-end extractive pipeline.

    raw text → segment → detect connectives → annotate (topos base)
             → word-sentence matrix → keywords → Score = C_w * W_w → rank
             → top-k in document order + conclusion notes
"""

import math
from collections.abc import Iterable

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..connectives.models import Lexicon
from ..errors import EmptyDocument
from ..orientation.engine import (
    ScaleTally,
    SentenceAnnotation,
    document_orientation,
    generate_constraints,
)
from ..scoring.matrix import build_matrix, extract_keywords
from ..scoring.scorer import SentenceScore, rank, score_sentence
from ..text.models import Document
from ..text.segmenter import segment_sentences
from ..topoi.models import ArgOrientation, ToposBase

logger = structlog.get_logger()


class SummaryConfig(BaseModel):
    """Configuration for one summarization run."""

    ratio: float = Field(default=0.3, gt=0, le=1, description="Fraction of sentences kept")
    alpha: float = Field(default=0.5, gt=0, le=1, description="Keyword threshold vs max frequency")
    paper_fidelity: bool = Field(default=False, description="Keep only maximum-frequency keywords")

    @property
    def keyword_threshold(self) -> float:
        return 1.0 if self.paper_fidelity else self.alpha


class SelectedSentence(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    text: str


class ConclusionNote(BaseModel):
    """A generated conclusion: the orientation a selected sentence argues for."""

    model_config = ConfigDict(frozen=True)

    sentence_index: int
    orientation: ArgOrientation
    rendered: str

    @classmethod
    def for_sentence(cls, sentence_index: int, orientation: ArgOrientation) -> "ConclusionNote":
        return cls(
            sentence_index=sentence_index, orientation=orientation, rendered=orientation.rendered
        )


class Summary(BaseModel):
    """Selected sentences in document order, their conclusions and the full score table."""

    model_config = ConfigDict(frozen=True)

    selected: tuple[SelectedSentence, ...]
    conclusions: tuple[ConclusionNote, ...] = ()
    scores: tuple[SentenceScore, ...] = ()
    ranking: tuple[int, ...] = ()
    annotations: tuple[SentenceAnnotation, ...] = ()
    orientation: tuple[ScaleTally, ...] = ()

    @model_validator(mode="after")
    def _check_order(self) -> "Summary":
        indices = [s.index for s in self.selected]
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError("selected sentences must be in strictly increasing document order")
        chosen = set(indices)
        if any(note.sentence_index not in chosen for note in self.conclusions):
            raise ValueError("conclusions may only annotate selected sentences")
        return self

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.selected)


def summary_length(n_sentences: int, ratio: float) -> int:
    """k = max(1, floor(ratio * N))."""
    return max(1, math.floor(ratio * n_sentences))


class ArgumentativeSummarizer:
    """
    Argumentation-aware extractive summarizer for a single document.

    Usage:
        summarizer = ArgumentativeSummarizer(lexicon, base, stopwords, SummaryConfig(ratio=0.5))
        summary = summarizer.summarize_text(text)
    """

    def __init__(
        self,
        lexicon: Lexicon,
        base: ToposBase,
        stopwords: Iterable[str] = frozenset(),
        config: SummaryConfig | None = None,
    ):
        self.lexicon = lexicon
        self.base = base
        self.stopwords = frozenset(stopwords)
        self.config = config or SummaryConfig()

    def summarize_text(self, raw_text: str) -> Summary:
        """Segment `raw_text` with this summarizer's stopwords, then summarize."""
        return self.summarize(segment_sentences(raw_text, self.stopwords))

    def summarize(self, doc: Document) -> Summary:
        n = len(doc.sentences)
        if n == 0:
            raise EmptyDocument("document contains no sentences")

        # Step 1: constraints
        annotations = generate_constraints(doc, self.lexicon, self.base)

        # Step 2: keywords and scores
        matrix = build_matrix(doc)
        keywords = extract_keywords(matrix, self.config.keyword_threshold)
        scores = [
            score_sentence(sentence, keywords, annotation)
            for sentence, annotation in zip(doc.sentences, annotations)
        ]
        ranking = rank(scores)

        # Step 3: top-k back into document order, with their conclusions
        k = summary_length(n, self.config.ratio)
        chosen = sorted(ranking[:k])
        selected = [SelectedSentence(index=i, text=doc.sentences[i].text) for i in chosen]
        conclusions = []
        for i in chosen:
            orientation = annotations[i].sentence_orientation
            if orientation is not None:
                conclusions.append(ConclusionNote.for_sentence(i, orientation))

        logger.info(
            f"Selected {k} of {n} sentences "
            f"({len(keywords)} keywords, {len(conclusions)} conclusions)"
        )
        return Summary(
            selected=tuple(selected),
            conclusions=tuple(conclusions),
            scores=tuple(scores),
            ranking=tuple(ranking),
            annotations=tuple(annotations),
            orientation=tuple(document_orientation(annotations)),
        )


def summarize(
    doc: Document,
    lexicon: Lexicon,
    base: ToposBase,
    config: SummaryConfig | None = None,
) -> Summary:
    """Summarize an already segmented document."""
    return ArgumentativeSummarizer(lexicon, base, config=config).summarize(doc)
