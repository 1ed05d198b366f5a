"""Clause splitting around a connective."""

from pydantic import BaseModel, ConfigDict

from ..connectives.models import ConnectiveMatch
from ..errors import TrailingConnective
from .models import Sentence, Token


class ClauseSplit(BaseModel):
    """A sentence cut into argument, connective and conclusion.

    `argument` and `conclusion` are half-open token index ranges.
    """

    model_config = ConfigDict(frozen=True)

    sentence_index: int
    argument: tuple[int, int]
    connective: ConnectiveMatch
    conclusion: tuple[int, int]
    argument_tokens: tuple[Token, ...]
    conclusion_tokens: tuple[Token, ...]

    @property
    def inter_sentential(self) -> bool:
        """Sentence-initial connective: the argument lies in earlier text."""
        return self.argument[0] == self.argument[1]

    @property
    def argument_text(self) -> str:
        return " ".join(t.surface for t in self.argument_tokens)

    @property
    def conclusion_text(self) -> str:
        return " ".join(t.surface for t in self.conclusion_tokens)


def split_on_connective(sentence: Sentence, match: ConnectiveMatch) -> ClauseSplit:
    """Split `sentence` into the tokens before and after `match`."""
    n_tokens = len(sentence.tokens)
    if match.last >= n_tokens:
        raise ValueError(
            f"connective span {match.token_span} outside sentence {sentence.index} "
            f"({n_tokens} tokens)"
        )
    if match.last + 1 == n_tokens:
        raise TrailingConnective(
            f"connective {match.text!r} ends sentence {sentence.index}; no conclusion clause"
        )
    return ClauseSplit.model_construct(
        sentence_index=sentence.index,
        argument=(0, match.first),
        connective=match,
        conclusion=(match.last + 1, n_tokens),
        argument_tokens=sentence.tokens[: match.first],
        conclusion_tokens=sentence.tokens[match.last + 1 :],
    )
