from collections.abc import Callable

import pytest

from src.connectives import Lexicon, load_lexicon
from src.resources import DEFAULT_STOPWORDS, DEMO_LEXICON, DEMO_TOPOI
from src.text import Sentence, load_stopwords, segment_sentences
from src.topoi import ToposBase, load_topos_base


@pytest.fixture(scope="session")
def stopwords() -> frozenset[str]:
    return load_stopwords(DEFAULT_STOPWORDS)


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    return load_lexicon(DEMO_LEXICON)


@pytest.fixture(scope="session")
def base(stopwords: frozenset[str]) -> ToposBase:
    return load_topos_base(DEMO_TOPOI, stopwords=stopwords)


@pytest.fixture
def make_sentence(stopwords: frozenset[str]) -> Callable[[str], Sentence]:
    """Segment a one-sentence string with the shipped stopwords."""

    def _make(text: str) -> Sentence:
        doc = segment_sentences(text, stopwords)
        assert len(doc.sentences) == 1
        return doc.sentences[0]

    return _make
