"""Run-constrained and prefix-constrained word languages.

``F_n(p, k)`` holds the length ``n``, weight ``k`` words with no run of ``p``
consecutive 1's. ``C_n(p, k)`` holds the length ``n``, weight ``k`` words in
which every prefix has at least ``p`` times as many 0's as 1's; ``p`` may be any
nonnegative rational.
"""

import re
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import islice
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .errors import LanguageError, SweepLimitError
from .words import BinaryWord

RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r"^(\d+)(?:/(\d+))?$")


class Family(str, Enum):
    """Constrained word family."""

    RUN_CONSTRAINED = "fib"
    PREFIX_CONSTRAINED = "prefix"


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` into an exact nonnegative rational.

    Raises:
        LanguageError: If the text is malformed or ``b`` is zero
    """
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise LanguageError(f"invalid rational {text!r}; expected 'a' or 'a/b'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise LanguageError(f"invalid rational {text!r}; denominator must be > 0")
    return Fraction(num, den)


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise LanguageError("p must be a number, not a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise LanguageError(f"unsupported value for p: {value!r}")


@dataclass(frozen=True)
class LanguageSpec:
    """A constrained language ``F_n(p, k)`` or ``C_n(p, k)``.

    ``p`` is normalized to a ``Fraction``; the run-constrained family requires
    an integer ``p >= 2``.
    """

    family: Family
    n: int
    k: int
    p: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "p", _as_fraction(self.p))

        if self.n < 0:
            raise LanguageError(f"n must be nonnegative, got {self.n}")
        if self.k < 0:
            raise LanguageError(f"k must be nonnegative, got {self.k}")
        if self.p < 0:
            raise LanguageError(f"p must be nonnegative, got {self.p}")

        if self.family is Family.RUN_CONSTRAINED:
            if self.p.denominator != 1 or self.p < 2:
                raise LanguageError(
                    f"run-constrained words need an integer p >= 2, got {self.p}"
                )
            if self.k > self.n:
                raise LanguageError(f"k={self.k} exceeds n={self.n}")
        elif (self.p + 1) * self.k > self.n:
            raise LanguageError(
                f"prefix-constrained words need (p+1)k <= n, "
                f"got p={self.p}, k={self.k}, n={self.n}"
            )

    @classmethod
    def fibonacci(cls, n: int, k: int, p: RationalLike = 2) -> "LanguageSpec":
        return cls(Family.RUN_CONSTRAINED, n, k, _as_fraction(p))

    @classmethod
    def prefix(cls, n: int, k: int, p: RationalLike) -> "LanguageSpec":
        return cls(Family.PREFIX_CONSTRAINED, n, k, _as_fraction(p))

    @property
    def integer_p(self) -> bool:
        return self.p.denominator == 1

    def __str__(self) -> str:
        name = "F" if self.family is Family.RUN_CONSTRAINED else "C"
        return f"{name}_{self.n}({self.p},{self.k})"


def member(spec: LanguageSpec, word: BinaryWord) -> bool:
    """Return whether ``word`` belongs to the language described by ``spec``.

    Raises:
        LanguageError: If the word length differs from ``spec.n``
    """
    if len(word) != spec.n:
        raise LanguageError(
            f"word {word.bits!r} has length {len(word)}, expected {spec.n}"
        )
    if word.weight != spec.k:
        return False

    if spec.family is Family.RUN_CONSTRAINED:
        return "1" * spec.p.numerator not in word.bits

    num, den = spec.p.numerator, spec.p.denominator
    zeros = ones = 0
    for char in word.bits:
        if char == "0":
            zeros += 1
        else:
            ones += 1
            if zeros * den < num * ones:
                return False
    return True


def iter_lex(spec: LanguageSpec) -> Iterator[BinaryWord]:
    """Yield the members of ``spec`` in lexicographic order.

    Words are grown one symbol at a time on an explicit stack; a prefix is
    abandoned as soon as it breaks the constraint or cannot reach weight ``k``.
    """
    n, k = spec.n, spec.k
    num, den = spec.p.numerator, spec.p.denominator
    run_limit = num if spec.family is Family.RUN_CONSTRAINED else None

    def options(zeros: int, ones: int, run: int) -> Iterator[str]:
        if k - ones < n - zeros - ones:
            yield "0"
        if ones < k:
            if run_limit is not None:
                allowed = run + 1 < run_limit
            else:
                allowed = zeros * den >= num * (ones + 1)
            if allowed:
                yield "1"

    if n == 0:
        yield BinaryWord("")
        return

    chars: List[str] = []
    frames: List[Tuple[int, int, int, Iterator[str]]] = [(0, 0, 0, options(0, 0, 0))]
    while frames:
        zeros, ones, run, pending = frames[-1]
        symbol = next(pending, None)
        if symbol is None:
            frames.pop()
            if chars:
                chars.pop()
            continue

        chars.append(symbol)
        if symbol == "0":
            state = (zeros + 1, ones, 0)
        else:
            state = (zeros, ones + 1, run + 1)
        if len(chars) == n:
            yield BinaryWord("".join(chars))
            chars.pop()
        else:
            frames.append((*state, options(*state)))


def enumerate_lex(spec: LanguageSpec) -> List[BinaryWord]:
    """All members of ``spec`` in lexicographic order (0 < 1)."""
    return list(iter_lex(spec))


def count_prefix_formula(n: int, p: int, k: int) -> int:
    """Return ``|C_n(p,k)| = C(n,k) - p*C(n,k-1)`` for integer ``p``.

    Raises:
        LanguageError: If ``p`` is negative or ``(p+1)k > n``
    """
    if isinstance(p, Fraction):
        if p.denominator != 1:
            raise LanguageError(f"the closed count needs an integer p, got {p}")
        p = p.numerator
    if p < 0 or k < 0 or n < 0:
        raise LanguageError("n, p and k must be nonnegative")
    if (p + 1) * k > n:
        raise LanguageError(f"(p+1)k <= n is required, got p={p}, k={k}, n={n}")
    if k == 0:
        return 1
    return comb(n, k) - p * comb(n, k - 1)


def fuss_catalan(p: int, n: int) -> int:
    """Pfaff-Fuss-Catalan number ``binom((p+1)n, n) / (pn+1)``."""
    if p < 0 or n < 0:
        raise LanguageError("p and n must be nonnegative")
    return comb((p + 1) * n, n) // (p * n + 1)


def count_run_constrained(n: int, p: int, k: int) -> int:
    """Return ``|F_n(p,k)|`` by dynamic programming over the current 1-run.

    The table maps ``(weight, run)`` of a prefix to the number of such
    prefixes and is advanced one symbol at a time.

    Raises:
        LanguageError: If ``p < 2`` or ``k`` is outside ``[0, n]``
    """
    if p < 2:
        raise LanguageError(f"p must be >= 2, got {p}")
    if not 0 <= k <= n:
        raise LanguageError(f"k must lie in [0, {n}], got {k}")

    table: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for position in range(n):
        remaining = n - position - 1
        grown: Dict[Tuple[int, int], int] = defaultdict(int)
        for (weight, run), ways in table.items():
            if weight + remaining >= k:
                grown[(weight, 0)] += ways
            if weight < k and run + 1 < p:
                grown[(weight + 1, run + 1)] += ways
        table = grown
    return sum(ways for (weight, _), ways in table.items() if weight == k)


def count_fibonacci_total(n: int, p: int = 2) -> int:
    """Number of length ``n`` words with no ``p`` consecutive 1's, any weight."""
    return sum(count_run_constrained(n, p, k) for k in range(n + 1))


def _closed_size(spec: LanguageSpec) -> Optional[int]:
    if spec.family is Family.RUN_CONSTRAINED:
        return count_run_constrained(spec.n, spec.p.numerator, spec.k)
    if spec.integer_p:
        return count_prefix_formula(spec.n, spec.p.numerator, spec.k)
    return None


def count_up_to(spec: LanguageSpec, limit: int) -> int:
    """Return ``min(|spec|, limit)``, enumerating at most ``limit`` words."""
    size = _closed_size(spec)
    if size is not None:
        return min(size, limit)
    return sum(1 for _ in islice(iter_lex(spec), limit))


def language_size(spec: LanguageSpec, limit: Optional[int] = None) -> int:
    """Cardinality of ``spec``, by formula when one applies, else by enumeration.

    Raises:
        SweepLimitError: If ``limit`` is given and the language is larger
    """
    size = _closed_size(spec)
    if size is None:
        if limit is None:
            return sum(1 for _ in iter_lex(spec))
        size = count_up_to(spec, limit + 1)
        if size > limit:
            raise SweepLimitError(
                f"{spec} has more than {limit} words, the sweep limit"
            )
        return size
    if limit is not None and size > limit:
        raise SweepLimitError(
            f"{spec} has {size} words, more than the sweep limit of {limit}"
        )
    return size
