"""Topos base: argumentative scales, topoi and their topical forms."""

from .base import (
    conclude,
    derive_topical_forms,
    dump_topos_base,
    load_topos_base,
    match_clause,
    parse_topos_base,
)
from .models import (
    ALL_TOPICAL_FORMS,
    ArgOrientation,
    Scale,
    ScaleSign,
    Sign,
    TopicalForm,
    Topos,
    ToposBase,
)

__all__ = [
    "ALL_TOPICAL_FORMS",
    "ArgOrientation",
    "Scale",
    "ScaleSign",
    "Sign",
    "TopicalForm",
    "Topos",
    "ToposBase",
    "conclude",
    "derive_topical_forms",
    "dump_topos_base",
    "load_topos_base",
    "match_clause",
    "parse_topos_base",
]
