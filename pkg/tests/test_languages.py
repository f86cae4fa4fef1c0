"""Tests for language membership, enumeration and counting."""

from fractions import Fraction
from itertools import product
from math import comb

import pytest

from src.core.errors import LanguageError, SweepLimitError
from src.core.languages import (
    Family,
    LanguageSpec,
    count_fibonacci_total,
    count_prefix_formula,
    count_run_constrained,
    count_up_to,
    enumerate_lex,
    fuss_catalan,
    language_size,
    member,
    parse_rational,
)
from src.core.words import BinaryWord


def bits(words):
    return [word.bits for word in words]


@pytest.mark.parametrize(
    "spec,text,expected",
    [
        (LanguageSpec.fibonacci(5, 2), "01010", True),
        (LanguageSpec.fibonacci(5, 2), "01100", False),
        (LanguageSpec.fibonacci(5, 2), "01000", False),
        (LanguageSpec.prefix(6, 3, 1), "010101", True),
        (LanguageSpec.prefix(6, 3, 1), "101010", False),
        (LanguageSpec.prefix(5, 2, "3/2"), "00101", True),
        (LanguageSpec.prefix(5, 2, "3/2"), "01001", False),
    ],
)
def test_member(spec, text, expected):
    """Membership follows the run and prefix constraints."""
    assert member(spec, BinaryWord(text)) is expected


def test_member_rejects_length_mismatch():
    """Words of the wrong length are an error, not a non-member."""
    with pytest.raises(LanguageError):
        member(LanguageSpec.fibonacci(5, 2), BinaryWord("0101"))


def test_enumerate_lex_examples():
    """Enumeration lists members in lexicographic order."""
    assert bits(enumerate_lex(LanguageSpec.fibonacci(4, 1))) == [
        "0001",
        "0010",
        "0100",
        "1000",
    ]
    assert bits(enumerate_lex(LanguageSpec.prefix(4, 2, 1))) == ["0011", "0101"]
    assert bits(enumerate_lex(LanguageSpec.prefix(5, 2, "3/2"))) == ["00011", "00101"]


def test_enumerate_fibonacci_total_length_three():
    """Length 3 words with no 11 number five."""
    total = sum(len(enumerate_lex(LanguageSpec.fibonacci(3, k))) for k in range(4))
    assert total == 5


@pytest.mark.parametrize("n", range(0, 9))
def test_enumerate_matches_filtering(n):
    """Pruned enumeration equals filtering every word of length n."""
    for k in range(n + 1):
        specs = [LanguageSpec.fibonacci(n, k), LanguageSpec.fibonacci(n, k, 3)]
        specs += [
            LanguageSpec.prefix(n, k, p)
            for p in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
            if (p + 1) * k <= n
        ]
        for spec in specs:
            expected = [
                "".join(chars)
                for chars in product("01", repeat=n)
                if member(spec, BinaryWord("".join(chars)))
            ]
            assert bits(enumerate_lex(spec)) == expected


def test_count_prefix_formula_examples():
    """Closed counts of small prefix languages."""
    assert count_prefix_formula(6, 1, 3) == 5
    assert count_prefix_formula(7, 2, 2) == 7
    assert count_prefix_formula(4, 0, 2) == 6


def test_count_prefix_formula_rejects_bad_parameters():
    """Invalid parameters raise LanguageError."""
    with pytest.raises(LanguageError):
        count_prefix_formula(4, 1, 3)
    with pytest.raises(LanguageError):
        count_prefix_formula(4, -1, 1)


def test_fuss_catalan_examples():
    """Fuss-Catalan numbers for small p and n."""
    assert fuss_catalan(1, 3) == 5
    assert fuss_catalan(2, 3) == 12
    assert fuss_catalan(2, 3) == count_prefix_formula(9, 2, 3)
    for p in range(4):
        assert fuss_catalan(p, 0) == 1


def test_count_run_constrained_examples():
    """Run-constrained counts of small languages."""
    assert count_run_constrained(5, 2, 2) == 6
    for k in range(1, 7):
        assert count_run_constrained(2 * k - 1, 2, k) == 1
    for n in range(10):
        assert count_run_constrained(n, 2, 0) == 1


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_prefix_formula_matches_enumeration(p):
    """Closed count equals brute-force enumeration for n <= 14."""
    for n in range(15):
        for k in range(n // (p + 1) + 1):
            spec = LanguageSpec.prefix(n, k, p)
            assert count_prefix_formula(n, p, k) == len(enumerate_lex(spec))


@pytest.mark.parametrize("p", [1, 2])
def test_fuss_catalan_matches_enumeration(p):
    """Fuss-Catalan numbers count C_{(p+1)n}(p,n)."""
    for n in range(5):
        spec = LanguageSpec.prefix((p + 1) * n, n, p)
        assert fuss_catalan(p, n) == len(enumerate_lex(spec))


def test_catalan_numbers():
    """p=1 gives the Catalan numbers."""
    assert [fuss_catalan(1, n) for n in range(5)] == [1, 1, 2, 5, 14]


@pytest.mark.parametrize("p", [2, 3])
def test_run_constrained_count_matches_enumeration(p):
    """The DP count matches enumeration for n <= 14."""
    for n in range(15):
        for k in range(n + 1):
            spec = LanguageSpec.fibonacci(n, k, p)
            assert count_run_constrained(n, p, k) == len(enumerate_lex(spec))


def test_fibonacci_totals_follow_recurrence():
    """Totals over k follow the Fibonacci recurrence."""
    totals = [count_fibonacci_total(n) for n in range(21)]
    assert totals[:4] == [1, 2, 3, 5]
    for n in range(2, 21):
        assert totals[n] == totals[n - 1] + totals[n - 2]


def test_rational_p_agrees_with_integer_p():
    """p = a/1 and p = a classify every word of length <= 12 identically."""
    for n in range(13):
        for chars in product("01", repeat=n):
            word = BinaryWord("".join(chars))
            for a in range(4):
                if (a + 1) * word.weight > n:
                    continue
                as_rational = LanguageSpec.prefix(n, word.weight, f"{a}/1")
                as_integer = LanguageSpec.prefix(n, word.weight, a)
                assert member(as_rational, word) == member(as_integer, word)


def test_language_size_uses_enumeration_for_rational_p():
    """Rational p is counted by enumeration."""
    spec = LanguageSpec.prefix(5, 2, "3/2")
    assert language_size(spec) == 2
    assert language_size(LanguageSpec.prefix(6, 3, 1)) == 5
    assert language_size(LanguageSpec.fibonacci(5, 2)) == 6


@pytest.mark.parametrize(
    "text,expected",
    [("3", Fraction(3)), ("3/2", Fraction(3, 2)), ("4/2", Fraction(2)), ("0", 0)],
)
def test_parse_rational(text, expected):
    """Integers and fractions parse exactly."""
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "a", "1/0", "-1", "1.5", "1/2/3"])
def test_parse_rational_rejects_malformed_text(text):
    """Malformed rationals raise LanguageError."""
    with pytest.raises(LanguageError):
        parse_rational(text)


def test_language_spec_validation():
    """Run-constrained words need integer p >= 2; prefix words need (p+1)k <= n."""
    with pytest.raises(LanguageError):
        LanguageSpec.fibonacci(5, 2, 1)
    with pytest.raises(LanguageError):
        LanguageSpec.fibonacci(5, 2, "5/2")
    with pytest.raises(LanguageError):
        LanguageSpec.prefix(5, 2, "2")
    with pytest.raises(LanguageError):
        LanguageSpec.prefix(4, -1, 0)
    spec = LanguageSpec(Family("prefix"), 5, 2, Fraction(3, 2))
    assert spec.family is Family.PREFIX_CONSTRAINED
    assert not spec.integer_p
    assert str(spec) == "C_5(3/2,2)"


def test_long_sparse_languages():
    """Counting and enumeration handle words of length well past 1000."""
    assert count_run_constrained(1000, 2, 1) == 1000
    assert count_run_constrained(1000, 2, 2) == comb(999, 2)
    assert language_size(LanguageSpec.fibonacci(900, 1)) == 900

    listed = enumerate_lex(LanguageSpec.fibonacci(1500, 1))
    assert len(listed) == 1500
    assert listed[0].bits == "0" * 1499 + "1"
    assert listed[-1].bits == "1" + "0" * 1499


def test_language_size_stops_at_the_limit():
    """Rational-p languages are enumerated only up to the limit."""
    large = LanguageSpec.prefix(40, 10, "1/2")
    assert count_up_to(large, 5) == 5
    with pytest.raises(SweepLimitError):
        language_size(large, limit=100)

    assert count_up_to(LanguageSpec.prefix(5, 2, "3/2"), 10) == 2
    assert language_size(LanguageSpec.prefix(5, 2, "3/2"), limit=2) == 2
    with pytest.raises(SweepLimitError):
        language_size(LanguageSpec.fibonacci(5, 2), limit=5)


if __name__ == "__main__":
    pytest.main([__file__])
