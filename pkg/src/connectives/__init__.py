"""Argumentative connective lexicon and detection."""

from .lexicon import detect_connectives, dump_lexicon, load_lexicon, parse_lexicon
from .models import ConnectiveEntry, ConnectiveKind, ConnectiveMatch, Lexicon

__all__ = [
    "ConnectiveEntry",
    "ConnectiveKind",
    "ConnectiveMatch",
    "Lexicon",
    "detect_connectives",
    "dump_lexicon",
    "load_lexicon",
    "parse_lexicon",
]
