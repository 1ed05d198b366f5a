"""Exception hierarchy for argsum."""


class ArgsumError(ValueError):
    """Base class for all argsum errors."""


class ResourceParseError(ArgsumError):
    """A lexicon, topos base or stopword file could not be parsed."""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        self.message = message
        super().__init__(f"{source}:{line}: {message}")


class DuplicateForm(ResourceParseError):
    """Two lexicon records claim the same surface form."""


class DuplicateId(ResourceParseError):
    """A scale or topos id is declared twice."""


class UnknownScale(ResourceParseError):
    """A topos references a scale that is never declared."""


class TrailingConnective(ArgsumError):
    """A splitting connective has no tokens after it."""


class EmptyDocument(ArgsumError):
    """The input document contains no sentences."""
