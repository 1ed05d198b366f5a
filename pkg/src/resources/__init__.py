"""Shipped resource files: stopword list, demo lexicon and demo topos base."""

from pathlib import Path

RESOURCE_DIR = Path(__file__).parent

DEFAULT_STOPWORDS = RESOURCE_DIR / "stopwords.txt"
DEMO_LEXICON = RESOURCE_DIR / "demo_lexicon.txt"
DEMO_TOPOI = RESOURCE_DIR / "demo_topoi.txt"
