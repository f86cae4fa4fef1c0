"""Exception hierarchy for GrayGreed."""


class GrayGreedError(ValueError):
    """Base class for every input or precondition error raised by the library."""


class InvalidWordError(GrayGreedError):
    """Word text contains a character other than '0' or '1'."""

    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(
            f"invalid character {text[index]!r} at index {index} in word {text!r}"
        )


class LanguageError(GrayGreedError):
    """Language parameters are out of range or malformed."""


class MembershipError(GrayGreedError):
    """A word is not a member of the language it is used with."""


class MoveError(GrayGreedError):
    """A transposition does not swap a 1 with a 0."""


class ListFormatError(GrayGreedError):
    """A word list mixes lengths or weights."""


class SweepLimitError(GrayGreedError):
    """A brute-force sweep would exceed the configured language size bound."""
