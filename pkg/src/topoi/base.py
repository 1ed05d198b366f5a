"""
Topos base: file grammar, belief closure, clause-to-scale matching and
single-step conclusion licensing.

File grammar (UTF-8, `#` comment lines, declarations in any order):

    scale <id>: lexeme[, lexeme...]          multiword lexemes quoted
    topos <id>: <+|-><scale_id> -> <+|-><scale_id>
"""

import csv
import re
from collections import defaultdict
from collections.abc import Iterable, Sequence
from pathlib import Path

import structlog

from ..errors import DuplicateId, ResourceParseError, UnknownScale
from ..text.models import ClauseRole, Token
from .models import ArgOrientation, Scale, ScaleSign, Sign, TopicalForm, Topos, ToposBase

logger = structlog.get_logger()

_ID = r"[A-Za-z_][\w-]*"
_SCALE = re.compile(rf"^scale\s+(?P<id>{_ID})\s*:\s*(?P<lexemes>.*)$")
_TOPOS = re.compile(
    rf"^topos\s+(?P<id>{_ID})\s*:\s*"
    rf"(?P<p_sign>[+\-−])\s*(?P<p>{_ID})\s*->\s*(?P<q_sign>[+\-−])\s*(?P<q>{_ID})\s*$"
)

NEGATORS = frozenset({"not", "no", "never", "cannot"})
NEGATION_WINDOW = 3


def _split_lexemes(raw: str, source: str, line_no: int) -> tuple[str, ...]:
    try:
        fields = next(csv.reader([raw], skipinitialspace=True))
    except (csv.Error, StopIteration):
        raise ResourceParseError(source, line_no, "malformed lexeme list") from None
    lexemes = tuple(" ".join(field.lower().split()) for field in fields)
    if not lexemes or not all(lexemes):
        raise ResourceParseError(source, line_no, "empty lexeme")
    return lexemes


def parse_topos_base(
    text: str,
    source: str = "<string>",
    stopwords: Iterable[str] | None = None,
) -> ToposBase:
    """Parse a topos base in two passes: declarations first, references second.

    With `stopwords`, a lexeme containing a stopword is rejected because
    clause matching never sees stopword tokens.
    """
    stop = frozenset(stopwords or ())
    scales: list[Scale] = []
    topoi: list[tuple[int, Topos]] = []
    declared: dict[str, int] = {}
    topos_lines: dict[str, int] = {}

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue

        if match := _SCALE.match(line):
            scale_id = match.group("id")
            if scale_id in declared:
                raise DuplicateId(
                    source,
                    line_no,
                    f"scale {scale_id!r} already declared on line {declared[scale_id]}",
                )
            lexemes = _split_lexemes(match.group("lexemes"), source, line_no)
            for lexeme in lexemes:
                if stop.intersection(lexeme.split()):
                    raise ResourceParseError(
                        source, line_no, f"lexeme {lexeme!r} contains a stopword"
                    )
            declared[scale_id] = line_no
            scales.append(Scale(id=scale_id, lexemes=lexemes))

        elif match := _TOPOS.match(line):
            topos_id = match.group("id")
            if topos_id in topos_lines:
                raise DuplicateId(
                    source,
                    line_no,
                    f"topos {topos_id!r} already declared on line {topos_lines[topos_id]}",
                )
            if match.group("p") == match.group("q"):
                raise ResourceParseError(
                    source,
                    line_no,
                    f"topos {topos_id!r} links scale {match.group('p')!r} to itself",
                )
            topos_lines[topos_id] = line_no
            topoi.append((
                line_no,
                Topos(
                    id=topos_id,
                    antecedent=ScaleSign(
                        scale=match.group("p"), sign=Sign.parse(match.group("p_sign"))
                    ),
                    consequent=ScaleSign(
                        scale=match.group("q"), sign=Sign.parse(match.group("q_sign"))
                    ),
                ),
            ))

        else:
            raise ResourceParseError(
                source, line_no, f"expected a scale or topos declaration: {line!r}"
            )

    # Second pass: scales may be declared after the topoi that use them.
    for line_no, topos in topoi:
        for side in (topos.antecedent, topos.consequent):
            if side.scale not in declared:
                raise UnknownScale(
                    source,
                    line_no,
                    f"topos {topos.id!r} references undeclared scale {side.scale!r}",
                )

    return ToposBase(scales=tuple(scales), topoi=tuple(topos for _, topos in topoi))


def load_topos_base(path: Path, stopwords: Iterable[str] | None = None) -> ToposBase:
    """Load a topos base file."""
    text = Path(path).read_text(encoding="utf-8")
    base = parse_topos_base(text, source=str(path), stopwords=stopwords)
    logger.info(f"Loaded {len(base.topoi)} topoi over {len(base.scales)} scales from {path}")
    return base


def _quote(lexeme: str) -> str:
    return f'"{lexeme}"' if " " in lexeme or "," in lexeme else lexeme


def dump_topos_base(base: ToposBase) -> str:
    """Serialize back to the file grammar; parsing the result gives an equal base."""
    lines = [
        f"scale {scale.id}: {', '.join(_quote(x) for x in scale.lexemes)}" for scale in base.scales
    ]
    lines.extend(f"topos {topos}" for topos in base.topoi)
    return "\n".join(lines) + ("\n" if lines else "")


def derive_topical_forms(topos: Topos) -> frozenset[TopicalForm]:
    """The belief closure of a topos: its declared form and the simultaneous negation.

    The complementary pair is not entailed.
    """
    declared = topos.declared_form
    return frozenset({declared, declared.negated()})


def is_negator(word: str) -> bool:
    return word in NEGATORS or word.endswith(("n't", "n’t"))


def _negated_at(tokens: Sequence[Token], position: int) -> bool:
    window = tokens[max(0, position - NEGATION_WINDOW) : position]
    return any(is_negator(token.normalized) for token in window)


def match_clause(clause_tokens: Sequence[Token], base: ToposBase) -> list[ScaleSign]:
    """Scales evoked by a clause, in base declaration order.

    Lexemes are looked up among non-stopword tokens, multiword lexemes as
    contiguous runs there. A scale's sign is + unless one of its occurrences
    has a negator within the 3 preceding clause tokens; then it flips once.
    """
    content = [(i, t.normalized) for i, t in enumerate(clause_tokens) if not t.is_stopword]
    words = [word for _, word in content]
    positions: dict[str, list[int]] = defaultdict(list)
    for j, word in enumerate(words):
        positions[word].append(j)

    matches = []
    for scale in base.scales:
        occurrences = []
        for phrase in scale.phrases:
            for j in positions.get(phrase[0], ()):
                if tuple(words[j : j + len(phrase)]) == phrase:
                    occurrences.append(content[j][0])
        if not occurrences:
            continue
        negated = any(_negated_at(clause_tokens, position) for position in occurrences)
        matches.append(ScaleSign(scale=scale.id, sign=Sign.MINUS if negated else Sign.PLUS))
    return matches


def conclude(
    base: ToposBase,
    premise: ScaleSign,
    source: ClauseRole = ClauseRole.WHOLE,
) -> list[ArgOrientation]:
    """Conclusions licensed in one step from `premise`, in topos file order.

    Duplicate (scale, sign) conclusions collapse onto the first licensing topos.
    """
    conclusions = []
    seen: set[tuple[str, Sign]] = set()
    for topos in base.topoi:
        if topos.antecedent.scale != premise.scale:
            continue
        for form in derive_topical_forms(topos):
            if form.p_sign != premise.sign:
                continue
            key = (topos.consequent.scale, form.q_sign)
            if key not in seen:
                seen.add(key)
                conclusions.append(
                    ArgOrientation(
                        scale=topos.consequent.scale,
                        sign=form.q_sign,
                        licensed_by=topos.id,
                        source=source,
                    )
                )
    return conclusions
