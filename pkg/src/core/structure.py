"""Verifiers for the structure of word lists.

A list can be checked for being a homogeneous Gray code, for being suffix
partitioned, for its tail-length ordering and for being recursive tail
partitioned (r-t partitioned): tail groups appear in monotone tail-length order
and every group, with its tail erased, is again r-t partitioned.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import ListFormatError
from .words import BinaryWord, is_homogeneous_move, tail_of, transposition_between

GRAY = "gray"
HOMOGENEOUS = "homogeneous"
SUFFIX_PARTITIONED = "suffix_partitioned"
RT_PARTITIONED = "rt_partitioned"


class TailDirection(str, Enum):
    """Ordering of tail lengths along a list."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    BOTH = "both"
    NEITHER = "neither"


@dataclass
class CheckReport:
    """Named check results with the earliest index witnessing a failure.

    ``violations`` maps each failed check to the index where it is first
    witnessed; ``first_violation`` is the smallest of them.
    """

    results: Dict[str, bool] = field(default_factory=dict)
    first_violation: Optional[int] = None
    violations: Dict[str, int] = field(default_factory=dict)

    @classmethod
    def from_violations(cls, checks: Dict[str, Optional[int]]) -> "CheckReport":
        """Build a report from check names mapped to violation indices."""
        violations = {
            name: index for name, index in checks.items() if index is not None
        }
        return cls(
            results={name: index is None for name, index in checks.items()},
            first_violation=min(violations.values()) if violations else None,
            violations=violations,
        )

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def merge(self, other: "CheckReport") -> "CheckReport":
        """Combine two reports, keeping the smallest violation index."""
        violations = {**self.violations, **other.violations}
        return CheckReport(
            results={**self.results, **other.results},
            first_violation=min(violations.values()) if violations else None,
            violations=violations,
        )


def _require_same_length(words: Sequence[BinaryWord]) -> None:
    if words and any(len(word) != len(words[0]) for word in words):
        raise ListFormatError("all words in the list must have the same length")


def is_homogeneous_gray(words: Sequence[BinaryWord]) -> CheckReport:
    """Check that ``words`` are distinct and linked by homogeneous transpositions.

    ``gray`` records distinctness plus single-transposition adjacency;
    ``homogeneous`` records that every such transposition has no 1 between the
    swapped bits.

    Raises:
        ListFormatError: If the words differ in length or weight
    """
    _require_same_length(words)
    if words and any(word.weight != words[0].weight for word in words):
        raise ListFormatError("all words in the list must have the same weight")

    gray_violation: Optional[int] = None
    homogeneous_violation: Optional[int] = None
    seen: Set[BinaryWord] = set()
    for index, word in enumerate(words):
        if word in seen:
            gray_violation = index
            break
        seen.add(word)
        if index == 0:
            continue
        move = transposition_between(words[index - 1], word)
        if move is None:
            gray_violation = index
            break
        if homogeneous_violation is None and not is_homogeneous_move(
            words[index - 1], *move
        ):
            homogeneous_violation = index

    if gray_violation is not None and (
        homogeneous_violation is None or gray_violation < homogeneous_violation
    ):
        homogeneous_violation = gray_violation
    return CheckReport.from_violations(
        {GRAY: gray_violation, HOMOGENEOUS: homogeneous_violation}
    )


def _first_split_block(keys: Sequence[object]) -> Optional[int]:
    """Index of the first element whose key reappears after its block closed."""
    closed: Set[object] = set()
    for index in range(1, len(keys)):
        if keys[index] != keys[index - 1]:
            closed.add(keys[index - 1])
            if keys[index] in closed:
                return index
    return None


def is_suffix_partitioned(words: Sequence[BinaryWord]) -> CheckReport:
    """Check that words sharing a suffix, of any length, are consecutive."""
    _require_same_length(words)
    length = len(words[0]) if words else 0
    violation: Optional[int] = None
    for size in range(1, length + 1):
        index = _first_split_block([word.bits[length - size :] for word in words])
        if index is not None and (violation is None or index < violation):
            violation = index
    return CheckReport.from_violations({SUFFIX_PARTITIONED: violation})


def _tail_sizes(words: Sequence[BinaryWord]) -> List[int]:
    return [tail_of(word).size for word in words]


def _direction_with_violation(
    sizes: Sequence[int],
) -> Tuple[TailDirection, Optional[int]]:
    runs: List[int] = []
    starts: List[int] = []
    for index, size in enumerate(sizes):
        if not runs or runs[-1] != size:
            runs.append(size)
            starts.append(index)

    if len(runs) <= 1:
        return TailDirection.BOTH, None
    split = _first_split_block(sizes)
    if split is not None:
        return TailDirection.NEITHER, split
    if all(a < b for a, b in zip(runs, runs[1:])):
        return TailDirection.INCREASING, None
    if all(a > b for a, b in zip(runs, runs[1:])):
        return TailDirection.DECREASING, None

    increasing = runs[1] > runs[0]
    for position in range(1, len(runs) - 1):
        if (runs[position + 1] > runs[position]) != increasing:
            return TailDirection.NEITHER, starts[position + 1]
    return TailDirection.NEITHER, starts[-1]


def tail_partition_direction(words: Sequence[BinaryWord]) -> TailDirection:
    """Classify how tail lengths evolve along ``words``.

    The tail ``0 1^m`` has length ``m + 1``; all-ones words count as length 0.
    Equal lengths must form a single contiguous group.
    """
    _require_same_length(words)
    return _direction_with_violation(_tail_sizes(words))[0]


def _rt_violation(words: Sequence[BinaryWord]) -> Optional[int]:
    pending: List[Tuple[List[BinaryWord], int]] = [(list(words), 0)]
    while pending:
        group, offset = pending.pop()
        if not group or len(group[0]) == 0:
            continue
        sizes = _tail_sizes(group)
        direction, violation = _direction_with_violation(sizes)
        if direction is TailDirection.NEITHER:
            return offset + (violation or 0)

        children: List[Tuple[List[BinaryWord], int]] = []
        start = 0
        for index in range(1, len(group) + 1):
            if index < len(group) and sizes[index] == sizes[start]:
                continue
            size = sizes[start]
            if size > 0:
                stripped = [
                    BinaryWord(word.bits[: len(word) - size])
                    for word in group[start:index]
                ]
                children.append((stripped, offset + start))
            start = index
        pending.extend(reversed(children))
    return None


def is_rt_partitioned(words: Sequence[BinaryWord]) -> CheckReport:
    """Check that ``words`` is recursive tail partitioned.

    Each level may be increasing or decreasing independently; a group of
    all-ones words has no tail to erase and is accepted as is.
    """
    _require_same_length(words)
    violation = _rt_violation(words)
    return CheckReport.from_violations({RT_PARTITIONED: violation})


def theorem1_holds(words: Sequence[BinaryWord]) -> bool:
    """A homogeneous suffix-partitioned Gray code must be r-t partitioned.

    Returns the truth of that implication for ``words``; lists that are not
    same-length, same-weight Gray codes satisfy it vacuously.
    """
    try:
        gray = is_homogeneous_gray(words)
    except ListFormatError:
        return True
    if not gray.passed or not is_suffix_partitioned(words).passed:
        return True
    return is_rt_partitioned(words).passed


def check_all(words: Sequence[BinaryWord]) -> CheckReport:
    """Run every verifier on ``words`` and merge the reports."""
    return (
        is_homogeneous_gray(words)
        .merge(is_suffix_partitioned(words))
        .merge(is_rt_partitioned(words))
    )


def iter_suffix_partitioned_gray_codes(
    words: Sequence[BinaryWord],
) -> Iterator[List[BinaryWord]]:
    """Yield every ordering of ``words`` that is a homogeneous, suffix
    partitioned Gray code.

    Backtracking over Hamilton paths of the homogeneous-transposition graph;
    a suffix block may only be left once all of its words are listed.
    """
    pool = sorted(set(words))
    if not pool:
        yield []
        return
    length = len(pool[0])

    neighbours: Dict[BinaryWord, List[BinaryWord]] = {word: [] for word in pool}
    for a_index, a in enumerate(pool):
        for b in pool[a_index + 1 :]:
            move = transposition_between(a, b)
            if move is not None and is_homogeneous_move(a, *move):
                neighbours[a].append(b)
                neighbours[b].append(a)

    block_size: Dict[Tuple[int, str], int] = {}
    for word in pool:
        for size in range(1, length + 1):
            key = (size, word.bits[length - size :])
            block_size[key] = block_size.get(key, 0) + 1

    path: List[BinaryWord] = []
    listed: Dict[Tuple[int, str], int] = {}
    closed: Set[Tuple[int, str]] = set()

    def can_follow(previous: BinaryWord, word: BinaryWord) -> bool:
        for size in range(1, length + 1):
            old = (size, previous.bits[length - size :])
            new = (size, word.bits[length - size :])
            if old == new:
                continue
            if listed.get(old, 0) < block_size[old] or new in closed:
                return False
        return True

    def push(word: BinaryWord) -> List[Tuple[int, str]]:
        newly_closed = []
        if path:
            previous = path[-1]
            for size in range(1, length + 1):
                old = (size, previous.bits[length - size :])
                if old != (size, word.bits[length - size :]) and old not in closed:
                    closed.add(old)
                    newly_closed.append(old)
        path.append(word)
        for size in range(1, length + 1):
            key = (size, word.bits[length - size :])
            listed[key] = listed.get(key, 0) + 1
        return newly_closed

    def pop(newly_closed: List[Tuple[int, str]]) -> None:
        word = path.pop()
        for size in range(1, length + 1):
            listed[(size, word.bits[length - size :])] -= 1
        closed.difference_update(newly_closed)

    def extend() -> Iterator[List[BinaryWord]]:
        if len(path) == len(pool):
            yield list(path)
            return
        current = path[-1]
        for word in neighbours[current]:
            if word in visited or not can_follow(current, word):
                continue
            visited.add(word)
            newly_closed = push(word)
            yield from extend()
            pop(newly_closed)
            visited.discard(word)

    visited: Set[BinaryWord] = set()
    for first in pool:
        visited.add(first)
        newly_closed = push(first)
        yield from extend()
        pop(newly_closed)
        visited.discard(first)


def theorem1_counterexample(
    words: Sequence[BinaryWord],
) -> Optional[List[BinaryWord]]:
    """First homogeneous suffix-partitioned Gray code of ``words`` that is not
    r-t partitioned, or None."""
    for ordering in iter_suffix_partitioned_gray_codes(words):
        if not is_rt_partitioned(ordering).passed:
            return ordering
    return None
