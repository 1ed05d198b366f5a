"""Data models for topoi: scales, signs, topical forms and orientations."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..text.models import ClauseRole


class Sign(str, Enum):
    """Direction on an argumentative scale."""

    PLUS = "+"
    MINUS = "-"

    @classmethod
    def parse(cls, symbol: str) -> "Sign":
        # Accept the typographic minus as well.
        return cls.MINUS if symbol in ("-", "−") else cls(symbol)

    def negated(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value


class Scale(BaseModel):
    """A graded property evoked by its lexemes (single words or quoted phrases)."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1)
    lexemes: tuple[str, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _check_lexemes(self) -> "Scale":
        for lexeme in self.lexemes:
            if not lexeme.strip() or lexeme != lexeme.lower():
                raise ValueError(f"lexeme {lexeme!r} of scale {self.id!r} must be lowercase")
        return self

    @property
    def phrases(self) -> list[tuple[str, ...]]:
        return [tuple(lexeme.split()) for lexeme in self.lexemes]


class ScaleSign(BaseModel):
    """A (scale, sign) pair: one side of a topos, or a matched clause premise."""

    model_config = ConfigDict(frozen=True)

    scale: str
    sign: Sign

    def negated(self) -> "ScaleSign":
        return ScaleSign(scale=self.scale, sign=self.sign.negated())

    def __str__(self) -> str:
        return f"{self.sign}{self.scale}"


class TopicalForm(BaseModel):
    """Signs of P and Q in one of the four //±P, ±Q// variants of a topos."""

    model_config = ConfigDict(frozen=True)

    p_sign: Sign
    q_sign: Sign

    def negated(self) -> "TopicalForm":
        return TopicalForm(p_sign=self.p_sign.negated(), q_sign=self.q_sign.negated())


ALL_TOPICAL_FORMS = frozenset(TopicalForm(p_sign=p, q_sign=q) for p in Sign for q in Sign)


class Topos(BaseModel):
    """A gradual inference rule //sP P, sQ Q//."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1)
    antecedent: ScaleSign
    consequent: ScaleSign

    @model_validator(mode="after")
    def _distinct_scales(self) -> "Topos":
        if self.antecedent.scale == self.consequent.scale:
            raise ValueError(f"topos {self.id!r} links scale {self.antecedent.scale!r} to itself")
        return self

    @property
    def declared_form(self) -> TopicalForm:
        return TopicalForm(p_sign=self.antecedent.sign, q_sign=self.consequent.sign)

    def __str__(self) -> str:
        return f"{self.id}: {self.antecedent} -> {self.consequent}"


class ToposBase(BaseModel):
    """Scales plus topoi over them, referentially consistent."""

    model_config = ConfigDict(frozen=True)

    scales: tuple[Scale, ...] = ()
    topoi: tuple[Topos, ...] = ()

    _scales_by_id: dict[str, Scale] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_integrity(self) -> "ToposBase":
        scale_ids = [scale.id for scale in self.scales]
        if len(set(scale_ids)) != len(scale_ids):
            raise ValueError("scale ids must be unique")
        topos_ids = [topos.id for topos in self.topoi]
        if len(set(topos_ids)) != len(topos_ids):
            raise ValueError("topos ids must be unique")
        known = set(scale_ids)
        for topos in self.topoi:
            for side in (topos.antecedent, topos.consequent):
                if side.scale not in known:
                    raise ValueError(f"topos {topos.id!r} references unknown scale {side.scale!r}")
        return self

    def model_post_init(self, __context: object) -> None:
        self._scales_by_id = {scale.id: scale for scale in self.scales}

    def scale(self, scale_id: str) -> Scale:
        return self._scales_by_id[scale_id]

    def has_topos(self, topos_id: str) -> bool:
        return any(topos.id == topos_id for topos in self.topoi)

    @property
    def is_empty(self) -> bool:
        return not self.scales and not self.topoi


class ArgOrientation(BaseModel):
    """The (scale, sign) direction a clause or sentence argues toward."""

    model_config = ConfigDict(frozen=True)

    scale: str
    sign: Sign
    licensed_by: str
    source: ClauseRole = ClauseRole.WHOLE

    @property
    def rendered(self) -> str:
        return f"{self.sign} {self.scale} (via {self.licensed_by})"

    def same_direction(self, other: "ArgOrientation") -> bool:
        return self.scale == other.scale and self.sign == other.sign
