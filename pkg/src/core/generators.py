"""Generator words: closed forms, brute-force discovery and last-word prediction.

A generator of a language is a start word whose greedy list visits every
member. For ``F_n(2,k)`` the generators are the words ``0^i 1 (01)^{k-1}``
padded with zeros; for ``C_n(p,k)`` with integer ``p`` they are two families of
words built from blocks of ``0^p 1`` plus the shifted blocks ``0^i 1^k 0^*``.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Set, Tuple

from ..logging_module import get_logger
from ..logging_module.logger import log_sweep_event
from .errors import LanguageError, MembershipError
from .greedy import greedy_run
from .languages import Family, LanguageSpec, enumerate_lex, language_size, member
from .words import BinaryWord, MoveOrder

logger = get_logger(__name__)


@dataclass(frozen=True)
class GenSetResult:
    """Brute-force and closed-form generator sets of one language."""

    brute: FrozenSet[BinaryWord]
    closed: FrozenSet[BinaryWord]

    @property
    def agree(self) -> bool:
        return self.brute == self.closed

    @property
    def cardinality(self) -> int:
        return len(self.brute)


def _require_fibonacci(spec: LanguageSpec) -> None:
    if spec.p != 2:
        raise LanguageError(
            f"run-constrained closed forms need p=2, got p={spec.p}"
        )
    if spec.k > 0 and spec.n < 2 * spec.k - 1:
        raise LanguageError(f"{spec} is empty: n must be at least 2k-1")


def _require_integer_p(spec: LanguageSpec) -> int:
    if not spec.integer_p:
        raise LanguageError(f"closed forms need an integer p, got p={spec.p}")
    return spec.p.numerator


def alpha_fib(n: int, k: int, i: int) -> BinaryWord:
    """Return ``0^i 1 (01)^{k-1} 0^{n-2k+1-i}``.

    Raises:
        LanguageError: If ``k < 1`` or ``i`` is outside ``[0, n-2k+1]``
    """
    if k < 1:
        raise LanguageError(f"k must be at least 1, got {k}")
    if not 0 <= i <= n - 2 * k + 1:
        raise LanguageError(f"i must lie in [0, {n - 2 * k + 1}], got {i}")
    return BinaryWord("0" * i + "1" + "01" * (k - 1) + "0" * (n - 2 * k + 1 - i))


def _alpha_prefix_word(n: int, p: int, k: int, i: int, j: int) -> BinaryWord:
    return BinaryWord(
        "0" * (p * j - i)
        + "1" * (j - 1)
        + "0" * i
        + "1"
        + ("0" * p + "1") * (k - j)
        + "0" * (n - (p + 1) * k)
    )


def alpha_prefix(n: int, p: int, k: int, i: int, j: int) -> BinaryWord:
    """Return ``0^{pj-i} 1^{j-1} 0^i 1 (0^p 1)^{k-j} 0^{n-(p+1)k}``.

    Raises:
        LanguageError: If ``p < 1``, ``(p+1)k > n`` or ``i``/``j`` are out of range
    """
    if p < 1:
        raise LanguageError(f"p must be at least 1, got {p}")
    if (p + 1) * k > n:
        raise LanguageError(f"(p+1)k <= n is required, got p={p}, k={k}, n={n}")
    if not 0 <= i <= p - 1:
        raise LanguageError(f"i must lie in [0, {p - 1}], got {i}")
    if not 1 <= j <= k:
        raise LanguageError(f"j must lie in [1, {k}], got {j}")
    return _alpha_prefix_word(n, p, k, i, j)


def beta_prefix(n: int, k: int, i: int, p: Optional[int] = None) -> BinaryWord:
    """Return ``0^i 1^k 0^{n-i-k}``.

    When ``p`` is given, ``i`` must also be at least ``pk + 1``.
    """
    low = 0 if p is None else p * k + 1
    if not low <= i <= n - k:
        raise LanguageError(f"i must lie in [{low}, {n - k}], got {i}")
    return BinaryWord("0" * i + "1" * k + "0" * (n - i - k))


def alpha_prefix_p0(n: int, k: int) -> BinaryWord:
    """Return ``1^k 0^{n-k}``."""
    if not 0 <= k <= n:
        raise LanguageError(f"k must lie in [0, {n}], got {k}")
    return BinaryWord("1" * k + "0" * (n - k))


def alpha_family(n: int, p: int, k: int) -> List[BinaryWord]:
    """All ``alpha_prefix`` words for ``0 <= i < p`` and ``1 <= j <= k``.

    Duplicates are kept: every ``i`` gives the same word when ``j = 1``.
    """
    return [
        alpha_prefix(n, p, k, i, j) for j in range(1, k + 1) for i in range(p)
    ]


def expected_gen_count(spec: LanguageSpec) -> int:
    """Number of generators: n-2k+2 for F_n(2,k) and n-k+1-ceil(p) for C_n(p,k)."""
    if spec.k == 0:
        return 1
    if spec.family is Family.RUN_CONSTRAINED:
        _require_fibonacci(spec)
        return spec.n - 2 * spec.k + 2
    return spec.n - spec.k + 1 - math.ceil(spec.p)


def gamma_word(spec: LanguageSpec) -> BinaryWord:
    """The word every greedy run not started from it ends with.

    ``0^{n-2k}(01)^k`` for ``F_n(2,k)`` (``1(01)^{k-1}`` when ``n = 2k-1``) and
    ``0^{n-k}1^k`` for ``C_n(p,k)``.
    """
    n, k = spec.n, spec.k
    if spec.family is Family.RUN_CONSTRAINED:
        _require_fibonacci(spec)
        if k == 0:
            return BinaryWord("0" * n)
        return alpha_fib(n, k, n - 2 * k + 1)
    return BinaryWord("0" * (n - k) + "1" * k)


def closed_form_gen_set(spec: LanguageSpec) -> FrozenSet[BinaryWord]:
    """Generator set predicted by the closed forms.

    Raises:
        LanguageError: For run-constrained words with ``p != 2`` or prefix
            constrained words with a non-integer ``p``
    """
    n, k = spec.n, spec.k
    if spec.family is Family.RUN_CONSTRAINED:
        _require_fibonacci(spec)
        if k == 0:
            return frozenset({BinaryWord("0" * n)})
        return frozenset(alpha_fib(n, k, i) for i in range(n - 2 * k + 2))

    p = _require_integer_p(spec)
    if k == 0:
        return frozenset({BinaryWord("0" * n)})
    if p == 0:
        return frozenset(beta_prefix(n, k, i) for i in range(n - k + 1))

    words: Set[BinaryWord] = set(alpha_family(n, p, k))
    words.update(beta_prefix(n, k, i, p) for i in range(p * k + 1, n - k + 1))
    return frozenset(words)


def _is_generator(job: Tuple[BinaryWord, LanguageSpec, MoveOrder, int]) -> bool:
    start, spec, order, size = job
    return greedy_run(start, spec, order, size=size).exhausted_language


def brute_force_gen_set(
    spec: LanguageSpec,
    order: MoveOrder = MoveOrder.ONE_FIRST,
    max_size: Optional[int] = None,
    workers: int = 1,
) -> FrozenSet[BinaryWord]:
    """Run the greedy algorithm from every member and keep the exhaustive starts.

    Args:
        spec: Language to sweep
        order: Candidate scan order of the greedy algorithm
        max_size: Refuse languages larger than this
        workers: Number of worker processes; 1 runs in-process

    Returns:
        The set of generator words

    Raises:
        SweepLimitError: If the language has more than ``max_size`` words
    """
    size = language_size(spec, max_size)

    members = enumerate_lex(spec)
    jobs = [(start, spec, order, size) for start in members]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunksize = max(1, len(jobs) // (4 * workers))
            flags = list(pool.map(_is_generator, jobs, chunksize=chunksize))
    else:
        flags = [_is_generator(job) for job in jobs]

    generators = frozenset(word for word, flag in zip(members, flags) if flag)
    logger.info(
        "generator_sweep_finished",
        **log_sweep_event(str(spec), size, len(generators), order.value, workers),
    )
    return generators


def gen_set_result(
    spec: LanguageSpec,
    order: MoveOrder = MoveOrder.ONE_FIRST,
    max_size: Optional[int] = None,
    workers: int = 1,
) -> GenSetResult:
    """Compare the brute-force generator set of ``spec`` with its closed form."""
    return GenSetResult(
        brute=brute_force_gen_set(spec, order, max_size=max_size, workers=workers),
        closed=closed_form_gen_set(spec),
    )


def predict_last_word(spec: LanguageSpec, start: BinaryWord) -> BinaryWord:
    """Predict the final word of the greedy list started at ``start``.

    Any start other than ``gamma_word(spec)`` ends at gamma. From gamma itself
    the end depends on the parity of ``k`` (and, for prefix-constrained words,
    on whether ``n = (p+1)k``).

    Raises:
        MembershipError: If ``start`` is not in the language
        LanguageError: If no prediction is available for ``spec``
    """
    if len(start) != spec.n or not member(spec, start):
        raise MembershipError(f"start word {start.bits!r} is not in {spec}")

    n, k = spec.n, spec.k
    if spec.family is Family.RUN_CONSTRAINED:
        _require_fibonacci(spec)
        if k == 0 or n == 2 * k - 1:
            return start
        gamma = gamma_word(spec)
        if start != gamma:
            return gamma
        return alpha_fib(n, k, 0 if k % 2 == 0 else n - 2 * k)

    p = _require_integer_p(spec)
    if k == 0:
        return start
    gamma = gamma_word(spec)
    if start != gamma:
        return gamma

    if (n, k) == (p + 1, 1):
        return BinaryWord("0" * p + "1")
    if k % 2 == 1 and n != (p + 1) * k:
        return BinaryWord("0" * (n - k - 1) + "1" * k + "0")
    if k % 2 == 1:
        if p == 0:
            return BinaryWord("1" * k)
        return _alpha_prefix_word(n, p, k, 1, k - 1)
    if p == 0:
        return alpha_prefix_p0(n, k)
    return _alpha_prefix_word(n, p, k, 1, k)
