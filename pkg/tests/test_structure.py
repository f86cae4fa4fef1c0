"""Tests for the list structure verifiers."""

import pytest

from src.core.errors import ListFormatError
from src.core.generators import alpha_fib
from src.core.greedy import greedy_run
from src.core.languages import LanguageSpec, enumerate_lex
from src.core.structure import (
    GRAY,
    HOMOGENEOUS,
    TailDirection,
    check_all,
    is_homogeneous_gray,
    is_rt_partitioned,
    is_suffix_partitioned,
    iter_suffix_partitioned_gray_codes,
    tail_partition_direction,
    theorem1_counterexample,
    theorem1_holds,
)
from src.core.words import BinaryWord

SWAPPED = {
    TailDirection.INCREASING: TailDirection.DECREASING,
    TailDirection.DECREASING: TailDirection.INCREASING,
    TailDirection.BOTH: TailDirection.BOTH,
    TailDirection.NEITHER: TailDirection.NEITHER,
}


def words(*texts):
    return [BinaryWord(text) for text in texts]


def all_traces(spec):
    return [greedy_run(start, spec).words for start in enumerate_lex(spec)]


def test_homogeneous_gray_accepts_simple_code():
    """A sliding 1 is a homogeneous Gray code."""
    assert is_homogeneous_gray(words("1000", "0100", "0010", "0001")).passed
    assert is_homogeneous_gray(words("1000", "0010")).passed


def test_homogeneous_gray_rejects_double_change():
    """Two transpositions in one step break the Gray property."""
    report = is_homogeneous_gray(words("0101", "1010"))
    assert not report.passed
    assert report.results[GRAY] is False
    assert report.first_violation == 1


def test_homogeneous_gray_rejects_jump_over_a_one():
    """Jumping over a 1 is not homogeneous."""
    report = is_homogeneous_gray(words("0101", "1100"))
    assert report.results[GRAY] is True
    assert report.results[HOMOGENEOUS] is False
    assert report.first_violation == 1


def test_homogeneous_gray_rejects_repeats():
    """Repeated words break the Gray property."""
    report = is_homogeneous_gray(words("1000", "0100", "1000"))
    assert report.results[GRAY] is False
    assert report.first_violation == 2


def test_homogeneous_gray_empty_list():
    """An empty list passes."""
    report = is_homogeneous_gray([])
    assert report.passed
    assert report.first_violation is None


def test_homogeneous_gray_requires_uniform_words():
    """Mixed lengths or weights raise ListFormatError."""
    with pytest.raises(ListFormatError):
        is_homogeneous_gray(words("100", "0100"))
    with pytest.raises(ListFormatError):
        is_homogeneous_gray(words("100", "110"))


def test_suffix_partitioned():
    """Split suffix blocks are reported at their reappearance."""
    assert is_suffix_partitioned(words("1000", "0100", "0010", "0001")).passed
    assert is_suffix_partitioned(words("0101")).passed
    report = is_suffix_partitioned(words("0011", "0101", "0110", "1001"))
    assert not report.passed
    assert report.first_violation == 3


@pytest.mark.parametrize(
    "texts,expected",
    [
        (("1000", "0100", "0010", "0001"), TailDirection.INCREASING),
        (("0001", "0010"), TailDirection.DECREASING),
        (("0010", "0001", "0100"), TailDirection.NEITHER),
        (("0010", "0100"), TailDirection.BOTH),
        (("0110", "0001", "0011"), TailDirection.INCREASING),
        (("11", "10", "01"), TailDirection.INCREASING),
    ],
)
def test_tail_partition_direction(texts, expected):
    """Tail lengths are classified along the list."""
    assert tail_partition_direction(words(*texts)) is expected


def test_rt_partitioned_examples():
    """Greedy-style lists are r-t partitioned."""
    assert is_rt_partitioned(words("1000", "0100", "0010", "0001")).passed
    assert is_rt_partitioned(words("01", "10")).passed
    assert is_rt_partitioned(words("10", "01")).passed
    assert is_rt_partitioned([]).passed


def test_rt_partitioned_rejects_non_monotone_tails():
    """Non-monotone tail lengths fail at the top level."""
    report = is_rt_partitioned(words("0010", "0001", "0100"))
    assert not report.passed
    assert report.first_violation == 2


def test_rt_partitioned_checks_every_level():
    """Tail groups are fine at the top but the 0-tail group is not below it."""
    listed = words("1000", "0010", "0100", "0001")
    report = is_rt_partitioned(listed)
    assert tail_partition_direction(listed) is TailDirection.INCREASING
    assert not report.passed
    assert report.first_violation == 2


def test_theorem1_holds_vacuously_for_non_gray_lists():
    """Lists that are not Gray codes satisfy the implication."""
    shuffled = words("10100", "01010", "00101", "10010", "01001", "10001")
    assert not is_homogeneous_gray(shuffled).passed
    assert theorem1_holds(shuffled)
    assert theorem1_holds(words("100", "0100"))


@pytest.mark.parametrize(
    "spec",
    [
        LanguageSpec.fibonacci(8, 2),
        LanguageSpec.fibonacci(9, 3),
        LanguageSpec.prefix(8, 3, 1),
        LanguageSpec.prefix(8, 2, 2),
        LanguageSpec.prefix(7, 3, 0),
    ],
)
def test_greedy_traces_satisfy_structure_laws(spec):
    """Greedy traces satisfy the r-t implication."""
    for trace in all_traces(spec):
        assert theorem1_holds(trace)
        if is_rt_partitioned(trace).passed:
            assert is_suffix_partitioned(trace).passed


@pytest.mark.parametrize(
    "spec", [LanguageSpec.fibonacci(8, 3), LanguageSpec.prefix(8, 3, 1)]
)
def test_reversal_symmetry(spec):
    """Reversing a list swaps the tail direction and keeps the checks."""
    for trace in all_traces(spec):
        reverse = trace[::-1]
        assert (
            is_homogeneous_gray(trace).passed == is_homogeneous_gray(reverse).passed
        )
        assert tail_partition_direction(reverse) is SWAPPED[
            tail_partition_direction(trace)
        ]
        assert is_rt_partitioned(trace).passed == is_rt_partitioned(reverse).passed


def test_check_all_merges_reports():
    """check_all reports every check."""
    report = check_all(words("1000", "0100", "0010", "0001"))
    assert set(report.results) == {
        "gray",
        "homogeneous",
        "suffix_partitioned",
        "rt_partitioned",
    }
    assert report.passed


def test_suffix_partitioned_gray_codes_are_valid():
    """The exhaustive search yields valid orderings including the greedy one."""
    spec = LanguageSpec.fibonacci(6, 2)
    orderings = list(iter_suffix_partitioned_gray_codes(enumerate_lex(spec)))
    assert orderings
    for ordering in orderings:
        assert sorted(ordering) == enumerate_lex(spec)
        assert is_homogeneous_gray(ordering).passed
        assert is_suffix_partitioned(ordering).passed

    generated = greedy_run(alpha_fib(6, 2, 0), spec).words
    assert generated in orderings


@pytest.mark.parametrize("n", range(1, 7))
def test_theorem1_exhaustive_small(n):
    """No counterexample for n <= 6."""
    for k in range(0, (n + 1) // 2 + 1):
        spec = LanguageSpec.fibonacci(n, k)
        assert theorem1_counterexample(enumerate_lex(spec)) is None


def test_rt_partitioned_handles_long_words():
    """Tail stripping goes 1500 levels deep without recursion."""
    assert is_rt_partitioned(words("0" * 1500)).passed
    assert is_rt_partitioned(words("0" * 1200 + "1", "0" * 1199 + "10")).passed


if __name__ == "__main__":
    pytest.main([__file__])
