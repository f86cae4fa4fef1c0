"""Binary words, tails and homogeneous transpositions."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .errors import InvalidWordError, MoveError

Move = Tuple[int, int]


class MoveOrder(str, Enum):
    """Priority used when scanning candidate transpositions.

    ONE_FIRST sorts by the position of the 1, then the 0; ZERO_FIRST the other
    way round.
    """

    ONE_FIRST = "one-first"
    ZERO_FIRST = "zero-first"


@dataclass(frozen=True, order=True)
class BinaryWord:
    """Immutable binary word; index 0 is the leftmost symbol."""

    bits: str
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", self.bits.count("1"))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> str:
        return self.bits[index]

    def __str__(self) -> str:
        return self.bits

    @property
    def length(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class Tail:
    """Maximal suffix of the form 0 1^m.

    ``present`` is False exactly for all-ones words (including the empty word).
    """

    run_length: int
    present: bool

    @property
    def size(self) -> int:
        """Number of symbols in the tail; 0 when there is no tail."""
        return self.run_length + 1 if self.present else 0

    @property
    def text(self) -> str:
        return "0" + "1" * self.run_length if self.present else ""


def parse_word(text: str) -> BinaryWord:
    """Build a word from its '0'/'1' text.

    Args:
        text: Word text, leftmost character first

    Returns:
        The parsed word

    Raises:
        InvalidWordError: If any character is not '0' or '1'
    """
    for index, char in enumerate(text):
        if char not in "01":
            raise InvalidWordError(text, index)
    return BinaryWord(text)


def tail_of(word: BinaryWord) -> Tail:
    """Return the tail of ``word``."""
    zero = word.bits.rfind("0")
    if zero < 0:
        return Tail(run_length=0, present=False)
    return Tail(run_length=len(word) - zero - 1, present=True)


def strip_tail(word: BinaryWord) -> BinaryWord:
    """Remove the tail from ``word``; all-ones words are returned unchanged."""
    tail = tail_of(word)
    return BinaryWord(word.bits[: len(word) - tail.size])


def homogeneous_moves(
    word: BinaryWord, order: MoveOrder = MoveOrder.ONE_FIRST
) -> List[Move]:
    """List every homogeneous transposition of ``word``.

    Each pair ``(i, j)`` has a 1 at ``i``, a 0 at ``j`` and only zeros strictly
    between them.

    Args:
        word: Word to transpose
        order: Sort order of the returned pairs

    Returns:
        All legal ``(i, j)`` pairs, sorted according to ``order``
    """
    bits = word.bits
    moves: List[Move] = []
    for i, char in enumerate(bits):
        if char != "1":
            continue
        j = i - 1
        while j >= 0 and bits[j] == "0":
            moves.append((i, j))
            j -= 1
        j = i + 1
        while j < len(bits) and bits[j] == "0":
            moves.append((i, j))
            j += 1

    if order is MoveOrder.ZERO_FIRST:
        moves.sort(key=lambda move: (move[1], move[0]))
    else:
        moves.sort()
    return moves


def apply_move(word: BinaryWord, i: int, j: int) -> BinaryWord:
    """Swap the 1 at ``i`` with the 0 at ``j``.

    Raises:
        MoveError: If ``word[i]`` is not 1 or ``word[j]`` is not 0
    """
    bits = word.bits
    if not (0 <= i < len(bits) and 0 <= j < len(bits)):
        raise MoveError(f"move ({i}, {j}) is out of range for word {bits!r}")
    if bits[i] != "1" or bits[j] != "0":
        raise MoveError(f"move ({i}, {j}) does not swap a 1 with a 0 in {bits!r}")

    chars = list(bits)
    chars[i], chars[j] = "0", "1"
    return BinaryWord("".join(chars))


def transposition_between(
    first: BinaryWord, second: BinaryWord
) -> Optional[Move]:
    """Return the ``(i, j)`` move turning ``first`` into ``second``, if any.

    Only single transpositions are recognised; homogeneity is not checked.
    """
    if len(first) != len(second):
        return None
    diff = [
        index for index, (a, b) in enumerate(zip(first.bits, second.bits)) if a != b
    ]
    if len(diff) != 2:
        return None
    a, b = diff
    if first[a] == "1" and first[b] == "0":
        return (a, b)
    if first[a] == "0" and first[b] == "1":
        return (b, a)
    return None


def is_homogeneous_move(word: BinaryWord, i: int, j: int) -> bool:
    """True iff no 1 lies strictly between positions ``i`` and ``j``."""
    low, high = min(i, j), max(i, j)
    return "1" not in word.bits[low + 1 : high]
