"""
Constraints generator: reads each sentence's argumentative orientation.

A splitting connective hands the sentence the orientation of its conclusion
clause ("A but B" argues like B). Without a splitting connective the sentence
is read as a whole.
"""

from collections.abc import Sequence

import structlog
from pydantic import BaseModel, ConfigDict

from ..connectives.lexicon import detect_connectives
from ..connectives.models import ConnectiveKind, ConnectiveMatch, Lexicon
from ..errors import TrailingConnective
from ..text.clauses import ClauseSplit, split_on_connective
from ..text.models import ClauseRole, Document, Sentence, Token
from ..topoi.base import conclude, match_clause
from ..topoi.models import ArgOrientation, Sign, ToposBase

logger = structlog.get_logger()

ClauseKey = tuple[tuple[tuple[str, bool], ...], ClauseRole]


class SentenceAnnotation(BaseModel):
    """Constraints attached to one sentence."""

    model_config = ConfigDict(frozen=True)

    sentence_index: int
    connective: ConnectiveMatch | None = None  # the governing splitting connective
    relation: str | None = None  # "anti_argument" or "support"
    inter_sentential: bool = False
    all_matches: tuple[ConnectiveMatch, ...] = ()
    unresolved: tuple[ConnectiveMatch, ...] = ()
    argument_orientations: tuple[ArgOrientation, ...] = ()
    conclusion_orientations: tuple[ArgOrientation, ...] = ()
    whole_orientations: tuple[ArgOrientation, ...] = ()
    sentence_orientation: ArgOrientation | None = None
    conflict: bool = False

    @property
    def has_connective(self) -> bool:
        return bool(self.all_matches)


class ScaleTally(BaseModel):
    """How many sentences argue each way on one scale."""

    model_config = ConfigDict(frozen=True)

    scale: str
    plus: int = 0
    minus: int = 0

    @property
    def net(self) -> Sign | None:
        if self.plus == self.minus:
            return None
        return Sign.PLUS if self.plus > self.minus else Sign.MINUS


def orient_clause(
    clause: Sequence[Token],
    base: ToposBase,
    source: ClauseRole = ClauseRole.WHOLE,
) -> list[ArgOrientation]:
    """match_clause then conclude, ordered by licensing topos in file order."""
    rank = {topos.id: position for position, topos in enumerate(base.topoi)}
    orientations = []
    for premise in match_clause(clause, base):
        orientations.extend(conclude(base, premise, source=source))
    orientations.sort(key=lambda o: rank[o.licensed_by])

    unique = []
    for orientation in orientations:
        if not any(orientation.same_direction(kept) for kept in unique):
            unique.append(orientation)
    return unique


class ClauseOrienter:
    """`orient_clause` over one base, memoized per clause.

    Matching reads only each token's normalized form and stopword flag, so
    clauses that agree on those orient identically. Built once per document.
    """

    def __init__(self, base: ToposBase):
        self.base = base
        self._cache: dict[ClauseKey, tuple[ArgOrientation, ...]] = {}

    def __call__(
        self, clause: Sequence[Token], source: ClauseRole = ClauseRole.WHOLE
    ) -> list[ArgOrientation]:
        key = (tuple((t.normalized, t.is_stopword) for t in clause), source)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._cache[key] = tuple(orient_clause(clause, self.base, source))
        return list(cached)

    @property
    def cache_size(self) -> int:
        return len(self._cache)


def _governing_split(
    sentence: Sentence, splitting: list[ConnectiveMatch]
) -> tuple[ClauseSplit | None, list[ConnectiveMatch]]:
    """Rightmost usable splitting connective, plus those left unresolved."""
    for position in range(len(splitting) - 1, -1, -1):
        try:
            split = split_on_connective(sentence, splitting[position])
        except TrailingConnective as e:
            logger.debug(f"Skipping connective: {e}")
            continue
        unresolved = splitting[:position] + splitting[position + 1 :]
        return split, unresolved
    return None, splitting


def _has_conflict(
    kind: ConnectiveKind,
    argument: Sequence[ArgOrientation],
    conclusion: Sequence[ArgOrientation],
) -> bool:
    if kind is not ConnectiveKind.OPPOSITION:
        return False
    return any(a.same_direction(c) for a in argument for c in conclusion)


def orient_sentence(
    sentence: Sentence,
    matches: Sequence[ConnectiveMatch],
    base: ToposBase,
    orient: ClauseOrienter | None = None,
) -> SentenceAnnotation:
    """Annotate one sentence from its detected connectives.

    Pass a shared `orient` to reuse clause readings across sentences.
    """
    orient = orient or ClauseOrienter(base)
    splitting = [match for match in matches if match.entry.splits]
    split, unresolved = _governing_split(sentence, splitting)

    if split is None:
        whole = orient(sentence.tokens, ClauseRole.WHOLE)
        return SentenceAnnotation.model_construct(
            sentence_index=sentence.index,
            all_matches=tuple(matches),
            unresolved=tuple(unresolved),
            whole_orientations=tuple(whole),
            sentence_orientation=whole[0] if whole else None,
        )

    kind = split.connective.entry.kind
    argument = orient(split.argument_tokens, ClauseRole.ARGUMENT)
    conclusion = orient(split.conclusion_tokens, ClauseRole.CONCLUSION)
    conflict = _has_conflict(kind, argument, conclusion)
    if conflict:
        logger.info(
            f"Sentence {sentence.index}: argument and conclusion agree "
            f"under {split.connective.text!r}"
        )

    return SentenceAnnotation.model_construct(
        sentence_index=sentence.index,
        connective=split.connective,
        relation=kind.relation,
        inter_sentential=split.inter_sentential,
        all_matches=tuple(matches),
        unresolved=tuple(unresolved),
        argument_orientations=tuple(argument),
        conclusion_orientations=tuple(conclusion),
        # No fallback to the argument clause when the conclusion licenses nothing.
        sentence_orientation=conclusion[0] if conclusion else None,
        conflict=conflict,
    )


def generate_constraints(
    doc: Document, lexicon: Lexicon, base: ToposBase
) -> list[SentenceAnnotation]:
    """One annotation per sentence, in document order."""
    orient = ClauseOrienter(base)
    annotations = [
        orient_sentence(sentence, detect_connectives(sentence, lexicon), base, orient)
        for sentence in doc.sentences
    ]
    logger.debug(
        f"Annotated {len(annotations)} sentences from {orient.cache_size} distinct clauses, "
        f"{sum(a.connective is not None for a in annotations)} with a governing connective"
    )
    return annotations


def document_orientation(annotations: Sequence[SentenceAnnotation]) -> list[ScaleTally]:
    """Tally sentence orientations per scale, scales in first-seen order."""
    counts: dict[str, list[int]] = {}
    for annotation in annotations:
        orientation = annotation.sentence_orientation
        if orientation is None:
            continue
        plus_minus = counts.setdefault(orientation.scale, [0, 0])
        plus_minus[0 if orientation.sign is Sign.PLUS else 1] += 1
    return [ScaleTally(scale=scale, plus=p, minus=m) for scale, (p, m) in counts.items()]
