"""
Connective lexicon: file grammar, serialization and detection.

Grammar, one record per line (UTF-8, `#` comment lines):

    connective "<form>" ["<form>" ...] kind=<opposition|consequence|scalar>
        weight=<decimal> [splits=<true|false>]
"""

import math
import re
from pathlib import Path

import structlog
from pydantic import ValidationError

from ..errors import DuplicateForm, ResourceParseError
from ..text.models import Sentence
from .models import ConnectiveEntry, ConnectiveKind, ConnectiveMatch, Lexicon

logger = structlog.get_logger()

_RECORD = re.compile(r'^connective\s+(?P<forms>(?:"[^"]*"\s*)+)(?P<attrs>.*)$')
_FORM = re.compile(r'"([^"]*)"')
_BOOL = {"true": True, "false": False}


def _parse_attrs(attrs: str, source: str, line_no: int) -> dict[str, str]:
    values: dict[str, str] = {}
    for item in attrs.split():
        key, sep, value = item.partition("=")
        if not sep or not value:
            raise ResourceParseError(source, line_no, f"expected key=value, got {item!r}")
        if key not in ("kind", "weight", "splits"):
            raise ResourceParseError(source, line_no, f"unknown attribute {key!r}")
        if key in values:
            raise ResourceParseError(source, line_no, f"attribute {key!r} given twice")
        values[key] = value
    for required in ("kind", "weight"):
        if required not in values:
            raise ResourceParseError(source, line_no, f"missing {required}=")
    return values


def _parse_record(line: str, source: str, line_no: int) -> ConnectiveEntry:
    match = _RECORD.match(line)
    if not match:
        raise ResourceParseError(source, line_no, f"not a connective record: {line!r}")

    forms = []
    for raw in _FORM.findall(match.group("forms")):
        words = tuple(raw.lower().split())
        if not words:
            raise ResourceParseError(source, line_no, "empty surface form")
        forms.append(words)

    attrs = _parse_attrs(match.group("attrs"), source, line_no)
    try:
        kind = ConnectiveKind(attrs["kind"])
    except ValueError:
        raise ResourceParseError(source, line_no, f"unknown kind {attrs['kind']!r}") from None
    try:
        weight = float(attrs["weight"])
    except ValueError:
        raise ResourceParseError(
            source, line_no, f"weight {attrs['weight']!r} is not a decimal"
        ) from None
    if not math.isfinite(weight):
        raise ResourceParseError(source, line_no, f"weight {attrs['weight']!r} is not finite")
    splits = None
    if "splits" in attrs:
        if attrs["splits"] not in _BOOL:
            raise ResourceParseError(source, line_no, "splits must be true or false")
        splits = _BOOL[attrs["splits"]]

    try:
        return ConnectiveEntry(surface_forms=tuple(forms), kind=kind, weight=weight, splits=splits)
    except ValidationError as e:
        message = e.errors()[0]["msg"]
        raise ResourceParseError(source, line_no, message) from None


def parse_lexicon(text: str, source: str = "<string>") -> Lexicon:
    """Parse lexicon text; entries keep file order."""
    entries = []
    claimed: dict[tuple[str, ...], int] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        entry = _parse_record(line, source, line_no)
        for form in entry.surface_forms:
            if form in claimed:
                raise DuplicateForm(
                    source,
                    line_no,
                    f"surface form {' '.join(form)!r} already declared on line {claimed[form]}",
                )
            claimed[form] = line_no
        entries.append(entry)
    return Lexicon(entries=tuple(entries))


def load_lexicon(path: Path) -> Lexicon:
    """Load a lexicon file."""
    lexicon = parse_lexicon(Path(path).read_text(encoding="utf-8"), source=str(path))
    logger.info(f"Loaded {len(lexicon)} connectives from {path}")
    return lexicon


def dump_lexicon(lexicon: Lexicon) -> str:
    """Serialize back to the line grammar; `parse_lexicon` of the result is equal."""
    lines = []
    for entry in lexicon.entries:
        forms = " ".join(f'"{" ".join(form)}"' for form in entry.surface_forms)
        line = f"connective {forms} kind={entry.kind.value} weight={entry.weight!r}"
        if entry.splits != entry.kind.splits_by_default:
            line += f" splits={str(entry.splits).lower()}"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def detect_connectives(sentence: Sentence, lexicon: Lexicon) -> list[ConnectiveMatch]:
    """Leftmost-longest, non-overlapping matching over normalized tokens."""
    words = [token.normalized for token in sentence.tokens]
    matches = []
    position = 0
    while position < len(words):
        for form, entry in lexicon.candidates(words[position]):
            end = position + len(form)
            if tuple(words[position:end]) == form:
                matches.append(
                    ConnectiveMatch.model_construct(
                        entry=entry, token_span=(position, end - 1), form=form
                    )
                )
                position = end
                break
        else:
            position += 1
    return matches
