"""Summary generation pipeline and output rendering."""

from .orchestrator import (
    ArgumentativeSummarizer,
    ConclusionNote,
    SelectedSentence,
    Summary,
    SummaryConfig,
    summarize,
    summary_length,
)
from .renderers import JsonRenderer, OutputFormat, Renderer, TextRenderer, get_renderer, render

__all__ = [
    "ArgumentativeSummarizer",
    "ConclusionNote",
    "JsonRenderer",
    "OutputFormat",
    "Renderer",
    "SelectedSentence",
    "Summary",
    "SummaryConfig",
    "TextRenderer",
    "get_renderer",
    "render",
    "summarize",
    "summary_length",
]
