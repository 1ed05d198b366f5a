"""Data models for argumentative connectives."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..text.models import ClauseRole


class ConnectiveKind(str, Enum):
    """The argumentative relation a connective imposes."""

    OPPOSITION = "opposition"  # argument / anti-argument ("but")
    CONSEQUENCE = "consequence"  # argument / conclusion ("therefore")
    SCALAR = "scalar"  # "little", "a little", "even": detected, never splits

    @property
    def splits_by_default(self) -> bool:
        return self is not ConnectiveKind.SCALAR

    @property
    def relation(self) -> str | None:
        """Relation label recorded on annotations."""
        return {
            ConnectiveKind.OPPOSITION: "anti_argument",
            ConnectiveKind.CONSEQUENCE: "support",
        }.get(self)


class ConnectiveEntry(BaseModel):
    """A lexicon record."""

    model_config = ConfigDict(frozen=True)

    surface_forms: tuple[tuple[str, ...], ...]
    kind: ConnectiveKind
    orientation_source: ClauseRole = ClauseRole.CONCLUSION
    weight: float = Field(..., gt=0, allow_inf_nan=False)
    splits: bool

    @model_validator(mode="before")
    @classmethod
    def _default_splits(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("splits") is None:
            kind = ConnectiveKind(data.get("kind"))
            data = {**data, "splits": kind.splits_by_default}
        return data

    @model_validator(mode="after")
    def _check(self) -> "ConnectiveEntry":
        if not self.surface_forms or not all(self.surface_forms):
            raise ValueError("a connective needs at least one non-empty surface form")
        for form in self.surface_forms:
            if any(word != word.lower() or not word for word in form):
                raise ValueError(f"surface form {form!r} must be lowercase words")
        # Both splitting kinds hand the sentence the conclusion clause's orientation.
        if self.orientation_source is not ClauseRole.CONCLUSION:
            raise ValueError(f"{self.kind.value} connectives orient from the conclusion clause")
        return self

    @property
    def label(self) -> str:
        return " ".join(self.surface_forms[0])


class ConnectiveMatch(BaseModel):
    """An occurrence of a lexicon form; `token_span` is inclusive."""

    model_config = ConfigDict(frozen=True)

    entry: ConnectiveEntry
    token_span: tuple[int, int]
    form: tuple[str, ...]

    @model_validator(mode="after")
    def _check(self) -> "ConnectiveMatch":
        first, last = self.token_span
        if not 0 <= first <= last or last - first + 1 != len(self.form):
            raise ValueError(f"token span {self.token_span} does not fit form {self.form}")
        if self.form not in self.entry.surface_forms:
            raise ValueError(f"{self.form} is not a form of {self.entry.label!r}")
        return self

    @property
    def first(self) -> int:
        return self.token_span[0]

    @property
    def last(self) -> int:
        return self.token_span[1]

    @property
    def text(self) -> str:
        return " ".join(self.form)


class Lexicon(BaseModel):
    """Immutable connective inventory with a first-word index for matching."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[ConnectiveEntry, ...] = ()

    _index: dict[str, list[tuple[tuple[str, ...], ConnectiveEntry]]] = PrivateAttr(
        default_factory=dict
    )

    @model_validator(mode="after")
    def _unique_forms(self) -> "Lexicon":
        seen: set[tuple[str, ...]] = set()
        for entry in self.entries:
            for form in entry.surface_forms:
                if form in seen:
                    raise ValueError(f"surface form {' '.join(form)!r} declared twice")
                seen.add(form)
        return self

    def model_post_init(self, __context: Any) -> None:
        index: dict[str, list[tuple[tuple[str, ...], ConnectiveEntry]]] = {}
        for entry in self.entries:
            for form in entry.surface_forms:
                index.setdefault(form[0], []).append((form, entry))
        for candidates in index.values():
            candidates.sort(key=lambda item: len(item[0]), reverse=True)
        self._index = index

    def candidates(self, first_word: str) -> list[tuple[tuple[str, ...], ConnectiveEntry]]:
        """Forms starting with `first_word`, longest first."""
        return self._index.get(first_word, [])

    def __len__(self) -> int:
        return len(self.entries)
