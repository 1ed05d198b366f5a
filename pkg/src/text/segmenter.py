"""
Sentence segmentation, tokenization and stopword handling.

Terminators are runs of ". ! ?" (optionally followed by closing quotes or
brackets) that sit before whitespace or the end of the text. Abbreviations
are not special-cased.
"""

import re
import sys
from collections.abc import Iterable, Iterator
from pathlib import Path

import structlog

from .models import Document, Sentence, Token

logger = structlog.get_logger()

_BOUNDARY = re.compile(r"""[.!?]+["'”’)\]]*(?=\s|\Z)""")
_WORD = re.compile(r"[^\W_]+(?:['’][^\W_]+)*")

# Every field is always passed, so constructed models can share one fields-set.
_TOKEN_FIELDS = set(Token.model_fields)
_SENTENCE_FIELDS = set(Sentence.model_fields)


def parse_stopwords(text: str) -> frozenset[str]:
    """Parse a stopword list: one word per line, `#` comment lines, blanks ignored."""
    words = set()
    for line in text.splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.add(word.lower())
    return frozenset(words)


def load_stopwords(path: Path) -> frozenset[str]:
    """Load a UTF-8 stopword file."""
    stopwords = parse_stopwords(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Loaded {len(stopwords)} stopwords from {path}")
    return stopwords


def tokenize(sentence_text: str, stopwords: Iterable[str] = frozenset()) -> list[Token]:
    """Split on whitespace and punctuation, dropping punctuation-only pieces.

    Apostrophe contractions ("don't") stay one token. Offsets are relative to
    `sentence_text`.
    """
    stop = stopwords if isinstance(stopwords, (set, frozenset)) else frozenset(stopwords)
    tokens = []
    for match in _WORD.finditer(sentence_text):
        # Interned so repeated words share one string.
        surface = sys.intern(match.group())
        normalized = sys.intern(surface.lower())
        tokens.append(
            Token.model_construct(
                _TOKEN_FIELDS,
                surface=surface,
                normalized=normalized,
                is_stopword=normalized in stop,
                start=match.start(),
                end=match.end(),
            )
        )
    return tokens


def _trim(text: str, start: int, end: int) -> tuple[int, int] | None:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return (start, end) if start < end else None


def _sentence_spans(raw_text: str) -> Iterator[tuple[int, int]]:
    start = 0
    for boundary in _BOUNDARY.finditer(raw_text):
        span = _trim(raw_text, start, boundary.end())
        if span:
            yield span
        start = boundary.end()
    span = _trim(raw_text, start, len(raw_text))
    if span:
        yield span


def segment_sentences(raw_text: str, stopwords: Iterable[str] = frozenset()) -> Document:
    """Segment `raw_text` into tokenized sentences.

    Every non-whitespace character ends up in exactly one sentence; empty
    input gives a document with no sentences.
    """
    stop = frozenset(stopwords)
    sentences = []
    for index, (start, end) in enumerate(_sentence_spans(raw_text)):
        text = raw_text[start:end]
        sentences.append(
            Sentence.model_construct(
                _SENTENCE_FIELDS,
                index=index,
                span=(start, end),
                text=text,
                tokens=tuple(tokenize(text, stop)),
            )
        )
    logger.debug(f"Segmented {len(sentences)} sentences from {len(raw_text)} characters")
    return Document(raw_text=raw_text, sentences=tuple(sentences))
