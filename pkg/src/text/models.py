"""Data models for segmented source text."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ClauseRole(str, Enum):
    """Which part of a sentence an orientation was read from."""

    ARGUMENT = "argument_clause"
    CONCLUSION = "conclusion_clause"
    WHOLE = "whole_sentence"


class Token(BaseModel):
    """A word of a sentence, with offsets relative to the sentence text."""

    model_config = ConfigDict(frozen=True)

    surface: str
    normalized: str
    is_stopword: bool = False
    start: int = Field(default=0, ge=0)
    end: int = Field(default=0, ge=0)


class Sentence(BaseModel):
    """The basic extraction unit."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    span: tuple[int, int]
    text: str
    tokens: tuple[Token, ...] = ()

    @property
    def content_words(self) -> list[str]:
        """Normalized non-stopword tokens in order."""
        return [t.normalized for t in self.tokens if not t.is_stopword]


class Document(BaseModel):
    """Raw text plus its sentences in text order."""

    model_config = ConfigDict(frozen=True)

    raw_text: str
    sentences: tuple[Sentence, ...] = ()

    @model_validator(mode="after")
    def _check_order(self) -> "Document":
        previous_end = -1
        for position, sentence in enumerate(self.sentences):
            start, end = sentence.span
            if sentence.index != position:
                raise ValueError(f"sentence {position} carries index {sentence.index}")
            if not previous_end <= start < end:
                raise ValueError(f"sentence {position} span {sentence.span} overlaps or is empty")
            previous_end = end
        return self

    def __len__(self) -> int:
        return len(self.sentences)

