"""Tests for the bag-of-words cosine baseline."""

import pytest
from pydantic import ValidationError

from src.baseline import BowVector, bow_vector, compare_sentences, cosine


class TestBowVector:
    def test_content_word_counts(self, stopwords):
        vector = bow_vector("The weather is beautiful but the weather", stopwords)
        assert vector.counts == {"weather": 2, "beautiful": 1}

    def test_only_stopwords(self, stopwords):
        assert bow_vector("It is what it is", stopwords).is_empty

    def test_counts_must_be_positive(self):
        with pytest.raises(ValidationError):
            BowVector(counts={"weather": 0})


class TestCosine:
    def test_swapped_clauses_are_identical(self, stopwords):
        result = compare_sentences(
            "The weather is beautiful but I have to work.",
            "I have to work but the weather is beautiful.",
            stopwords,
        )
        assert result.cosine == 1.0
        assert result.defined

    def test_nice_weather_pair_within_tolerance(self, stopwords):
        a = bow_vector("The weather is nice but I have to work.", stopwords)
        b = bow_vector("I have to work but the weather is nice.", stopwords)
        assert abs(cosine(a, b) - 1.0) <= 1e-9

    def test_disjoint(self, stopwords):
        assert compare_sentences("Nice weather.", "I have to work.", stopwords).cosine == 0.0

    def test_partial_overlap(self):
        a = BowVector(counts={"weather": 1, "work": 1})
        b = BowVector(counts={"weather": 1})
        assert cosine(a, b) == pytest.approx(2**-0.5)

    def test_symmetric(self, stopwords):
        a = bow_vector("Nice weather rarely lasts", stopwords)
        b = bow_vector("The weather is beautiful this weekend", stopwords)
        assert cosine(a, b) == cosine(b, a)

    def test_empty_is_undefined(self, stopwords):
        result = compare_sentences("It is.", "Nice weather.", stopwords)
        assert result.cosine == 0.0
        assert not result.defined

    def test_without_stopwords_connective_counts(self):
        result = compare_sentences("work but play", "play but work")
        assert result.cosine == 1.0
