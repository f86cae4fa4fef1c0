"""Command-line interface for GrayGreed.

Exit codes: 0 on success, 1 when a checked property or an agreement fails,
2 on usage or input errors.
"""

import sys
from pathlib import Path
from typing import Iterable, List, Optional

import click
from pydantic import ValidationError

from ..config import get_settings, load_settings, set_settings
from ..core.errors import GrayGreedError, ListFormatError
from ..core.generators import (
    brute_force_gen_set,
    closed_form_gen_set,
    expected_gen_count,
    predict_last_word,
)
from ..core.greedy import greedy_run
from ..core.languages import (
    Family,
    LanguageSpec,
    count_prefix_formula,
    count_run_constrained,
    enumerate_lex,
    iter_lex,
    parse_rational,
)
from ..core.structure import (
    GRAY,
    HOMOGENEOUS,
    RT_PARTITIONED,
    SUFFIX_PARTITIONED,
    CheckReport,
    check_all,
    is_homogeneous_gray,
    is_rt_partitioned,
    is_suffix_partitioned,
    theorem1_counterexample,
)
from ..core.words import BinaryWord, MoveOrder, parse_word
from ..logging_module import get_logger, setup_logging
from .documents import ChecksDocument, GensDocument, GreedyDocument, VerifyDocument

logger = get_logger(__name__)

CHECK_NAMES = {
    "gray": GRAY,
    "homogeneous": HOMOGENEOUS,
    "suffix": SUFFIX_PARTITIONED,
    "rt": RT_PARTITIONED,
}


class InputError(click.ClickException):
    """Usage or input error, reported with exit code 2."""

    exit_code = 2


def _build_spec(family: str, n: int, k: int, p: Optional[str]) -> LanguageSpec:
    if p is None:
        if family == Family.PREFIX_CONSTRAINED.value:
            raise InputError("--p is required for the prefix family")
        p = "2"
    try:
        return LanguageSpec(Family(family), n, k, parse_rational(p))
    except GrayGreedError as e:
        raise InputError(str(e))


def _parse(text: str) -> BinaryWord:
    try:
        return parse_word(text.strip())
    except GrayGreedError as e:
        raise InputError(str(e))


def _emit_words(words: Iterable[BinaryWord]) -> None:
    for word in words:
        click.echo(word.bits)


def _move_order(value: Optional[str]) -> MoveOrder:
    return MoveOrder(value or get_settings().greedy.move_order)


def language_options(func):
    """Attach the --family/--n/--k/--p options shared by language commands."""
    func = click.option(
        "--p", "p", type=str, default=None,
        help="Constraint parameter: integer or a/b (default 2 for fib)",
    )(func)
    func = click.option("--k", "k", type=int, required=True, help="Word weight")(func)
    func = click.option("--n", "n", type=int, required=True, help="Word length")(func)
    func = click.option(
        "--family",
        type=click.Choice([family.value for family in Family]),
        required=True,
        help="fib: no p consecutive 1's; prefix: prefixes hold p times more 0's",
    )(func)
    return func


move_order_option = click.option(
    "--move-order",
    type=click.Choice([order.value for order in MoveOrder]),
    default=None,
    help="Candidate transposition order (default from settings: one-first)",
)

format_option = click.option(
    "--format",
    "output",
    type=click.Choice(["lines", "json"]),
    default="lines",
    help="Output mode (default: lines)",
)


@click.group(
    epilog="""
Examples:

  graygreed enumerate --family prefix --n 4 --k 2 --p 1

  graygreed greedy --family fib --n 4 --k 1 --start 1000

  graygreed gens --family prefix --n 6 --k 3 --p 1 --method both

  graygreed greedy --family fib --n 6 --k 2 --start 100100 | graygreed verify
"""
)
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML configuration file",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (default from settings: WARNING)",
)
def cli(config_file: Optional[Path], log_level: Optional[str]) -> None:
    """Greedy homogeneous Gray codes for constrained binary words."""
    try:
        settings = load_settings(config_file)
    except ValidationError as e:
        raise InputError(f"invalid configuration: {e}")
    if log_level:
        settings.logging.level = log_level.upper()
    set_settings(settings)
    setup_logging(
        settings.logging.level, settings.logging.format, settings.logging.output
    )


@cli.command("enumerate")
@language_options
def enumerate_command(family: str, n: int, k: int, p: Optional[str]) -> None:
    """List the members of a language in lexicographic order."""
    spec = _build_spec(family, n, k, p)
    limit = get_settings().max_sweep
    for count, word in enumerate(iter_lex(spec), start=1):
        if count > limit:
            raise InputError(f"{spec} has more than {limit} words")
        click.echo(word.bits)


@cli.command("greedy")
@language_options
@click.option("--start", required=True, help="Start word, e.g. 000111")
@move_order_option
@format_option
def greedy_command(
    family: str,
    n: int,
    k: int,
    p: Optional[str],
    start: str,
    move_order: Optional[str],
    output: str,
) -> None:
    """Run the greedy Gray code algorithm from a start word."""
    spec = _build_spec(family, n, k, p)
    order = _move_order(move_order)
    try:
        trace = greedy_run(_parse(start), spec, order)
    except GrayGreedError as e:
        raise InputError(str(e))

    if output == "lines":
        _emit_words(trace.words)
        return

    try:
        predicted: Optional[str] = predict_last_word(spec, trace.start).bits
    except GrayGreedError:
        predicted = None
    report = check_all(trace.words)
    document = GreedyDocument(
        language=str(spec),
        start=trace.start.bits,
        move_order=order.value,
        words=[word.bits for word in trace.words],
        count=len(trace),
        exhausted=trace.exhausted_language,
        last_word=trace.last_word.bits,
        predicted_last_word=predicted,
        checks=ChecksDocument(
            gray=report.results[GRAY],
            homogeneous=report.results[HOMOGENEOUS],
            suffix_partitioned=report.results[SUFFIX_PARTITIONED],
            rt_partitioned=report.results[RT_PARTITIONED],
            first_violation=report.first_violation,
        ),
    )
    click.echo(document.model_dump_json(indent=2))


@cli.command("gens")
@language_options
@click.option(
    "--method",
    type=click.Choice(["brute", "closed", "both"]),
    default="both",
    help="How to obtain the generator set (default: both)",
)
@click.option(
    "--workers", type=int, default=None, help="Sweep processes (default from settings)"
)
@move_order_option
@format_option
def gens_command(
    family: str,
    n: int,
    k: int,
    p: Optional[str],
    method: str,
    workers: Optional[int],
    move_order: Optional[str],
    output: str,
) -> None:
    """Compute the generator set of a language."""
    spec = _build_spec(family, n, k, p)
    order = _move_order(move_order)
    settings = get_settings()

    brute = closed = None
    try:
        if method in ("closed", "both"):
            closed = sorted(closed_form_gen_set(spec))
        if method in ("brute", "both"):
            brute = sorted(
                brute_force_gen_set(
                    spec,
                    order,
                    max_size=settings.max_sweep,
                    workers=workers or settings.sweep.workers,
                )
            )
    except GrayGreedError as e:
        raise InputError(str(e))

    words = brute if brute is not None else closed
    agree = None if brute is None or closed is None else brute == closed
    try:
        expected: Optional[int] = expected_gen_count(spec)
    except GrayGreedError:
        expected = None

    if output == "json":
        document = GensDocument(
            language=str(spec),
            method=method,
            move_order=order.value,
            words=[word.bits for word in words],
            count=len(words),
            closed=None if method != "both" else [word.bits for word in closed],
            agree=agree,
            expected_count=expected,
        )
        click.echo(document.model_dump_json(indent=2))
    else:
        _emit_words(words)
        if agree is not None:
            click.echo(f"agree={str(agree).lower()}")

    if agree is False:
        logger.warning("generator_sets_disagree", language=str(spec))
        sys.exit(1)


def _read_words(stream) -> List[BinaryWord]:
    try:
        content = stream.read()
    except UnicodeDecodeError as e:
        raise InputError(f"word list is not valid UTF-8: {e}")

    words = []
    for number, line in enumerate(content.splitlines(), start=1):
        text = line.strip()
        if not text:
            raise InputError(f"blank line {number} in word list")
        try:
            words.append(parse_word(text))
        except GrayGreedError as e:
            raise InputError(f"line {number}: {e}")
    return words


@cli.command("verify")
@click.argument("source", type=click.File("r", encoding="utf-8"), default="-")
@click.option(
    "--checks",
    default="gray,homogeneous,suffix,rt",
    help="Comma separated subset of gray,homogeneous,suffix,rt",
)
@format_option
def verify_command(source, checks: str, output: str) -> None:
    """Verify structure properties of a word list (file or stdin)."""
    requested = [name.strip() for name in checks.split(",") if name.strip()]
    unknown = [name for name in requested if name not in CHECK_NAMES]
    if unknown or not requested:
        raise InputError(f"unknown checks: {', '.join(unknown) or '(none)'}")

    words = _read_words(source)
    report = CheckReport()
    try:
        if "gray" in requested or "homogeneous" in requested:
            report = report.merge(is_homogeneous_gray(words))
        if "suffix" in requested:
            report = report.merge(is_suffix_partitioned(words))
        if "rt" in requested:
            report = report.merge(is_rt_partitioned(words))
    except ListFormatError as e:
        raise InputError(str(e))

    results = {name: report.results[CHECK_NAMES[name]] for name in requested}
    failed = [CHECK_NAMES[name] for name in requested if not results[name]]
    violation = min((report.violations[name] for name in failed), default=None)

    if output == "json":
        document = VerifyDocument(
            count=len(words), results=results, first_violation=violation
        )
        click.echo(document.model_dump_json(indent=2))
    else:
        for name in requested:
            click.echo(f"{name}={str(results[name]).lower()}")
        if violation is not None:
            click.echo(f"first_violation={violation}")

    if failed:
        sys.exit(1)


@cli.command("count")
@language_options
@click.option(
    "--method",
    type=click.Choice(["formula", "brute", "both"]),
    default="both",
    help="Closed count, enumeration, or both (default: both)",
)
def count_command(
    family: str, n: int, k: int, p: Optional[str], method: str
) -> None:
    """Count the members of a language."""
    spec = _build_spec(family, n, k, p)
    counts = []

    if method in ("formula", "both"):
        if spec.family is Family.RUN_CONSTRAINED:
            counts.append(count_run_constrained(n, spec.p.numerator, k))
        elif spec.integer_p:
            counts.append(count_prefix_formula(n, spec.p.numerator, k))
        else:
            raise InputError(f"no closed count for non-integer p={spec.p}")

    if method in ("brute", "both"):
        limit = get_settings().max_sweep
        total = 0
        for total, _ in enumerate(iter_lex(spec), start=1):
            if total > limit:
                raise InputError(f"{spec} has more than {limit} words")
        counts.append(total)

    for value in counts:
        click.echo(str(value))
    if len(set(counts)) > 1:
        logger.warning("counts_disagree", language=str(spec), counts=counts)
        sys.exit(1)


@cli.command("predict")
@language_options
@click.option("--start", required=True, help="Start word")
def predict_command(family: str, n: int, k: int, p: Optional[str], start: str) -> None:
    """Print the predicted last word of the greedy list from a start word."""
    spec = _build_spec(family, n, k, p)
    try:
        click.echo(predict_last_word(spec, _parse(start)).bits)
    except GrayGreedError as e:
        raise InputError(str(e))


@cli.command("theorem1")
@language_options
def theorem1_command(family: str, n: int, k: int, p: Optional[str]) -> None:
    """Search every homogeneous suffix-partitioned Gray code of a small language
    for one that is not r-t partitioned."""
    spec = _build_spec(family, n, k, p)
    if n > 10:
        raise InputError("the exhaustive search is limited to n <= 10")
    counterexample = theorem1_counterexample(enumerate_lex(spec))
    if counterexample is None:
        click.echo("counterexample=none")
        return
    click.echo("counterexample=")
    _emit_words(counterexample)
    sys.exit(1)


def main() -> None:
    """Main CLI entry point."""
    cli(prog_name="graygreed")


if __name__ == "__main__":
    main()
