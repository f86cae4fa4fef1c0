"""Greedy Gray code algorithm over a constrained language.

Starting from a word of the language, the algorithm repeatedly applies the
first homogeneous transposition (in the chosen move order) that yields a
member not yet listed, and stops when no such transposition exists.
"""

from dataclasses import dataclass
from typing import List, Optional, Set

from ..logging_module import get_logger
from ..logging_module.logger import log_run_event
from .errors import MembershipError
from .languages import LanguageSpec, count_up_to, member
from .words import BinaryWord, MoveOrder, apply_move, homogeneous_moves

logger = get_logger(__name__)


@dataclass
class GreedyTrace:
    """Words produced by one greedy run, first word = start word."""

    words: List[BinaryWord]
    exhausted_language: bool
    move_order: MoveOrder

    @property
    def start(self) -> BinaryWord:
        return self.words[0]

    @property
    def last_word(self) -> BinaryWord:
        return self.words[-1]

    def __len__(self) -> int:
        return len(self.words)


def greedy_step(
    current: BinaryWord,
    visited: Set[BinaryWord],
    spec: LanguageSpec,
    order: MoveOrder = MoveOrder.ONE_FIRST,
) -> Optional[BinaryWord]:
    """Return the next word of the greedy list, or None when it cannot grow.

    Args:
        current: Last word of the list
        visited: Words already listed
        spec: Language being generated
        order: Candidate scan order

    Returns:
        First unvisited member reachable by a homogeneous transposition
    """
    for i, j in homogeneous_moves(current, order):
        candidate = apply_move(current, i, j)
        if candidate not in visited and member(spec, candidate):
            return candidate
    return None


def greedy_run(
    start: BinaryWord,
    spec: LanguageSpec,
    order: MoveOrder = MoveOrder.ONE_FIRST,
    size: Optional[int] = None,
) -> GreedyTrace:
    """Apply the greedy algorithm for ``spec`` to ``start``.

    Args:
        start: Initial word, must be a member of ``spec``
        spec: Language being generated
        order: Candidate scan order
        size: Known cardinality of ``spec``; when omitted the language is
            counted only up to one word past the trace length

    Returns:
        The full greedy trace

    Raises:
        MembershipError: If ``start`` is not in the language
    """
    if len(start) != spec.n or not member(spec, start):
        raise MembershipError(f"start word {start.bits!r} is not in {spec}")

    words = [start]
    visited = {start}
    while True:
        current = greedy_step(words[-1], visited, spec, order)
        if current is None:
            break
        words.append(current)
        visited.add(current)

    if size is None:
        size = count_up_to(spec, len(words) + 1)
    trace = GreedyTrace(
        words=words, exhausted_language=len(words) == size, move_order=order
    )
    logger.debug(
        "greedy_run_finished",
        language=str(spec),
        **log_run_event(
            start.bits, len(words), trace.exhausted_language, words[-1].bits
        ),
    )
    return trace
