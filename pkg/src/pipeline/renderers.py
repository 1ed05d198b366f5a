"""Summary renderers: plain text and JSON, byte-identical across runs."""

import json
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any

from .orchestrator import Summary


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class Renderer(ABC):
    """Abstract base class for summary renderers."""

    def __init__(self, explain: bool = False):
        self.explain = explain

    @abstractmethod
    def render(self, summary: Summary) -> bytes:
        """Serialize `summary`."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Format name."""


class TextRenderer(Renderer):
    """
    Sentences joined by single spaces, a blank line, then one line per
    conclusion. With explain, a score table and the document orientation follow.
    """

    @property
    def name(self) -> str:
        return "text"

    def render(self, summary: Summary) -> bytes:
        blocks = [summary.text]
        if summary.conclusions:
            blocks.append("\n".join(note.rendered for note in summary.conclusions))
        if self.explain:
            blocks.append(self._explain(summary))
        return ("\n\n".join(blocks) + "\n").encode("utf-8")

    def _explain(self, summary: Summary) -> str:
        annotations = {a.sentence_index: a for a in summary.annotations}
        lines = [f"{'index':>5}  {'Ww':>9}  {'Cw':>6}  {'score':>9}  connective  orientation"]
        for score in summary.scores:
            annotation = annotations.get(score.sentence_index)
            connective = "-"
            orientation = "-"
            if annotation is not None:
                if annotation.all_matches:
                    connective = ",".join(m.text for m in annotation.all_matches)
                if annotation.sentence_orientation is not None:
                    orientation = annotation.sentence_orientation.rendered
                if annotation.conflict:
                    orientation += " [conflict]"
            lines.append(
                f"{score.sentence_index:>5}  {score.keyword_weight:>9.4f}  "
                f"{score.connective_weight:>6.3f}  {score.score:>9.4f}  "
                f"{connective:<10}  {orientation}"
            )
        if summary.orientation:
            lines.append("")
            lines.append("document orientation:")
            for tally in summary.orientation:
                net = tally.net.value if tally.net else "="
                lines.append(f"  {tally.scale}: +{tally.plus} -{tally.minus} (net {net})")
        return "\n".join(lines)


class JsonRenderer(Renderer):
    """Stable schema: summary, conclusions, scores (scores only with explain)."""

    @property
    def name(self) -> str:
        return "json"

    def render(self, summary: Summary) -> bytes:
        payload: dict[str, Any] = {
            "summary": [{"index": s.index, "text": s.text} for s in summary.selected],
            "conclusions": [
                {
                    "index": note.sentence_index,
                    "scale": note.orientation.scale,
                    "sign": note.orientation.sign.value,
                    "topos": note.orientation.licensed_by,
                }
                for note in summary.conclusions
            ],
            "scores": [
                {
                    "index": score.sentence_index,
                    "Ww": score.keyword_weight,
                    "Cw": score.connective_weight,
                    "score": score.score,
                }
                for score in summary.scores
            ]
            if self.explain
            else [],
        }
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def get_renderer(output_format: OutputFormat | str, explain: bool = False) -> Renderer:
    """Get the renderer for a format name."""
    fmt = OutputFormat(output_format)  # ValueError on unknown names
    if fmt is OutputFormat.TEXT:
        return TextRenderer(explain)
    return JsonRenderer(explain)


def render(
    summary: Summary, output_format: OutputFormat | str = "text", explain: bool = False
) -> bytes:
    return get_renderer(output_format, explain).render(summary)
