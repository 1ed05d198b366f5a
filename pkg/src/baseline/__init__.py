"""Surface-similarity baseline that is blind to argumentative orientation."""

from .similarity import BowVector, Comparison, bow_vector, compare_sentences, cosine

__all__ = ["BowVector", "Comparison", "bow_vector", "compare_sentences", "cosine"]
