"""Command-line front end for building, classifying, searching and certifying ETGRS codes."""

import json
import logging
import sys
from typing import Annotated, NoReturn

import click
import numpy as np
import typer
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from etgrs import EtgrsError, OracleDisagreementError
from etgrs.algebra.field import FieldArray, FieldError, FieldSpec, parse_element, parse_field
from etgrs.algebra.matrix import format_matrix
from etgrs.codes.etgrs import (
    EtgrsParams,
    InvalidParamsError,
    classify_full,
    extension_vector,
    generator_matrix,
    punctured_generator,
    search,
)
from etgrs.codes.linear import LinearCode, Verdict
from etgrs.codes.nongrs import certify_c, certify_c1
from etgrs.common.logging import configure_logging
from etgrs.config import DEFAULT_WORKERS
from etgrs.examples import EXAMPLES, reproduce
from etgrs.reports import (
    ClaimStatus,
    ClassificationReport,
    EvalPath,
    Finding,
    Mode,
    NonGrsReport,
    ReproductionReport,
    SearchRow,
    report_schema,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="etgrs",
    help="Construct and classify extended twisted generalized Reed-Solomon codes",
    add_completion=False,
    rich_markup_mode="rich",
    no_args_is_help=True,
)

# fixed width keeps table output identical across terminals
console = Console(width=120, highlight=False)
err_console = Console(stderr=True, width=120, highlight=False)

EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2

MATRIX_CHOICES = ("G", "G1", "t", "dual", "schur-square")
CLAIM_MARKS = {ClaimStatus.PASS: "✓", ClaimStatus.DEVIATION: "~", ClaimStatus.FAIL: "✗"}

FieldOpt = Annotated[
    str, typer.Option("--field", help="Field as p, p^m or p^m:c0,...,cm (Conway modulus by default)")
]
NOpt = Annotated[int | None, typer.Option("--n", help="Number of evaluation points; checked against --alpha")]
KOpt = Annotated[int, typer.Option("--k", help="Code dimension, 3 <= k <= n")]
AlphaOpt = Annotated[str, typer.Option("--alpha", help="Comma list of distinct points: integers or g^t")]
VOpt = Annotated[
    str | None, typer.Option("--v", help="Comma list of nonzero column multipliers (default all ones)")
]
EtaOpt = Annotated[str, typer.Option("--eta", help="Nonzero twist coefficient")]
DeltaOpt = Annotated[str, typer.Option("--delta", help="Hook coefficient, may be zero")]
BudgetOpt = Annotated[
    int | None, typer.Option("--budget", help="Enumeration budget (default ETGRS_BUDGET or 2^24)")
]
FormatOpt = Annotated[str, typer.Option("--format", help="Output format: table or json")]
ViaOpt = Annotated[
    str, typer.Option("--via", help=f"How conditions are decided: {', '.join(EvalPath.values())}")
]


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    err_console.print(f"[bold red]Error:[/bold red] {escape(message)}")
    raise typer.Exit(code)


def _check_format(fmt: str) -> str:
    if fmt not in {"table", "json"}:
        _fail(f"--format must be 'table' or 'json', got {fmt!r}")
    return fmt


def _parse_list(spec: FieldSpec, option: str, text: str) -> list[int]:
    values = []
    for position, part in enumerate(text.split(","), start=1):
        if not part.strip():
            _fail(f"{option}: entry {position} is empty")
        try:
            values.append(int(parse_element(spec, part)))
        except FieldError as e:
            _fail(f"{option}: entry {position}: {e}")
    return values


def _parse_scalar(spec: FieldSpec, option: str, text: str) -> int:
    try:
        return int(parse_element(spec, text))
    except FieldError as e:
        _fail(f"{option}: {e}")


def _field(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except FieldError as e:
        _fail(f"--field: {e}")


def _build_params(
    field: str, n: int | None, k: int, alpha: str, v: str | None, eta: str, delta: str
) -> EtgrsParams:
    spec = _field(field)
    points = _parse_list(spec, "--alpha", alpha)
    multipliers = None if v is None else _parse_list(spec, "--v", v)
    if n is not None and n != len(points):
        _fail(f"--n is {n} but --alpha has {len(points)} entries")
    if multipliers is not None and len(multipliers) != len(points):
        _fail(f"--v has {len(multipliers)} entries, --alpha has {len(points)}")
    try:
        return EtgrsParams.build(
            spec,
            k,
            points,
            _parse_scalar(spec, "--eta", eta),
            _parse_scalar(spec, "--delta", delta),
            multipliers,
        )
    except InvalidParamsError as e:
        _fail(str(e))


def _parse_set(spec: FieldSpec, option: str, text: str) -> list[int]:
    match text.strip().lower():
        case "all":
            return list(range(spec.q))
        case "nonzero":
            return list(range(1, spec.q))
        case _:
            return _parse_list(spec, option, text)


def _print_findings(findings: list[Finding]) -> None:
    for finding in findings:
        console.print(f"[yellow]finding[/yellow] {escape(finding.kind)}: {escape(finding.message)}")


def _render_classification(report: ClassificationReport) -> None:
    console.print(f"[bold]{escape(report.headline)}[/bold]")
    if report.code.dual_min_distance is not None:
        console.print(f"dual distance: {report.code.dual_min_distance}")
    if report.agreement is not None:
        console.print(f"agreement: {'yes' if report.agreement else 'NO'}")
    if report.extension is not None:
        console.print(f"extension contract: {'ok' if report.extension.contract_ok else 'FAILED'}")
    if report.checks:
        table = Table(title="Conditions", box=box.SIMPLE, header_style="bold magenta")
        for column in ("theorem", "#", "statement", "holds", "witness"):
            table.add_column(column)
        for check in report.checks:
            for condition in check.conditions:
                table.add_row(
                    check.theorem,
                    str(condition.index),
                    escape(condition.statement),
                    "yes" if condition.holds else "no",
                    escape(str(condition.witness)) if condition.witness else "",
                )
        console.print(table)
    if report.schur is not None:
        _render_nongrs(report.schur)
    _print_findings(report.findings)
    if report.timings:
        for stage, seconds in sorted(report.timings.items()):
            console.print(f"time {stage}: {seconds:.3f}s")


def _render_nongrs(report: NonGrsReport, title: str = "C") -> None:
    console.print(f"[bold]non-GRS certificate for {title}[/bold]: regime {report.regime.value}")
    if report.schur_dim is not None:
        console.print(f"  schur dimension: {report.schur_dim} (GRS: {report.grs_expected})")
    if report.grs_reference is not None:
        console.print(f"  GRS reference: {report.grs_reference}")
    if report.witness_position is not None:
        console.print(f"  weight-one word of the dual square at coordinate {report.witness_position}")
    console.print(f"  certified: {'yes' if report.certified else 'no'}")
    _print_findings(report.findings)


@app.callback()
def _main(
    log_level: Annotated[
        str | None, typer.Option("--log-level", help="Level for the stderr log handler")
    ] = None,
    log_file: Annotated[
        str | None, typer.Option("--log-file", help="Also write JSON lines to this file")
    ] = None,
) -> None:
    configure_logging(level=log_level, log_file=log_file)


@app.command()
def classify(
    field: FieldOpt,
    k: KOpt,
    alpha: AlphaOpt,
    eta: EtaOpt,
    delta: DeltaOpt,
    n: NOpt = None,
    v: VOpt = None,
    mode: Annotated[str, typer.Option("--mode", help=f"One of {', '.join(Mode.values())}")] = "both",
    via: ViaOpt = "both",
    budget: BudgetOpt = None,
    fmt: FormatOpt = "table",
    timings: Annotated[bool, typer.Option("--timings", help="Report wall-clock time per stage")] = False,
    schur: Annotated[bool, typer.Option("--schur", help="Attach the non-GRS certificate")] = False,
) -> None:
    """Classify one code as MDS, NMDS, AMDS or neither."""
    _check_format(fmt)
    params = _build_params(field, n, k, alpha, v, eta, delta)
    try:
        report = classify_full(params, Mode.parse(mode), budget, via=EvalPath.parse(via), timings=timings)
        if schur:
            report = report.model_copy(update={"schur": certify_c(params)})
    except OracleDisagreementError as e:
        _fail(str(e), EXIT_DISAGREEMENT)
    except EtgrsError as e:
        _fail(str(e))

    if fmt == "json":
        typer.echo(report.model_dump_json(indent=2))
    else:
        _render_classification(report)
    if report.agreement is False:
        raise typer.Exit(EXIT_DISAGREEMENT)


def _render_search(rows: list[SearchRow], *, dual_amds: bool) -> None:
    table = Table(box=box.SIMPLE, header_style="bold magenta")
    columns = ["eta", "delta", "verdict", "code"]
    if dual_amds:
        columns.append("dual AMDS")
    if any(row.brute_verdict is not None for row in rows):
        columns.extend(["brute", "agree"])
    for column in columns:
        table.add_column(column)
    for row in rows:
        cells = [str(row.eta), str(row.delta), escape(row.verdict.label), escape(row.code.bracket)]
        if dual_amds:
            cells.append("yes" if row.dual_amds else "no")
        if "brute" in columns:
            cells.extend([
                escape(row.brute_verdict.label) if row.brute_verdict else "",
                "yes" if row.agreement else "NO",
            ])
        table.add_row(*cells)
    console.print(table)
    if dual_amds:
        console.print(f"dual AMDS: {sum(row.dual_amds for row in rows)}/{len(rows)}")


@app.command("search")
def search_cmd(
    field: FieldOpt,
    k: KOpt,
    alpha: AlphaOpt,
    n: NOpt = None,
    v: VOpt = None,
    eta_set: Annotated[str, typer.Option("--eta-set", help="all, nonzero or a comma list")] = "nonzero",
    delta_set: Annotated[str, typer.Option("--delta-set", help="all, nonzero or a comma list")] = "all",
    only: Annotated[
        str | None, typer.Option("--only", help=f"Keep rows with this verdict: {', '.join(Verdict.values())}")
    ] = None,
    dual_amds: Annotated[bool, typer.Option("--dual-amds", help="Report whether each dual is AMDS")] = False,
    brute: Annotated[
        bool, typer.Option("--brute", help="Confirm every verdict by exhaustive search")
    ] = False,
    workers: Annotated[
        int, typer.Option("--workers", help="Worker threads; output order is fixed")
    ] = DEFAULT_WORKERS,
    via: ViaOpt = "both",
    budget: BudgetOpt = None,
    fmt: FormatOpt = "table",
) -> None:
    """Classify every (eta, delta) pair for fixed points and dimension."""
    _check_format(fmt)
    spec = _field(field)
    etas = _parse_set(spec, "--eta-set", eta_set)
    deltas = _parse_set(spec, "--delta-set", delta_set)
    if not etas:
        _fail("--eta-set is empty")
    eta0 = next((e for e in etas if e != 0), None)
    if eta0 is None:
        _fail("--eta-set has no nonzero element")
    base = _build_params(field, n, k, alpha, v, str(eta0), "0")
    try:
        keep = None if only is None else Verdict.parse(only)
        rows = search(
            base, etas, deltas, Mode.BOTH if brute else Mode.THEOREMS, budget, workers, EvalPath.parse(via)
        )
    except OracleDisagreementError as e:
        _fail(str(e), EXIT_DISAGREEMENT)
    except EtgrsError as e:
        _fail(str(e))

    shown = rows if keep is None else [row for row in rows if row.verdict is keep]
    if fmt == "json":
        typer.echo(json.dumps([row.model_dump(mode="json") for row in shown], indent=2))
    else:
        _render_search(shown, dual_amds=dual_amds)
    if any(row.agreement is False for row in rows):
        raise typer.Exit(EXIT_DISAGREEMENT)


@app.command()
def certify(
    field: FieldOpt,
    k: KOpt,
    alpha: AlphaOpt,
    eta: EtaOpt,
    delta: DeltaOpt,
    n: NOpt = None,
    v: VOpt = None,
    fmt: FormatOpt = "table",
) -> None:
    """Certify that C and its punctured code C1 are not GRS."""
    _check_format(fmt)
    params = _build_params(field, n, k, alpha, v, eta, delta)
    try:
        reports = {"c1": certify_c1(params), "c": certify_c(params)}
    except EtgrsError as e:
        _fail(str(e))
    if fmt == "json":
        typer.echo(json.dumps({name: r.model_dump(mode="json") for name, r in reports.items()}, indent=2))
        return
    _render_nongrs(reports["c1"], "C1")
    _render_nongrs(reports["c"], "C")


def _render_reproduction(report: ReproductionReport) -> None:
    console.print(f"[bold]Example {report.example}[/bold]: {escape(report.title)}")
    table = Table(box=box.SIMPLE, header_style="bold magenta")
    for column in ("", "claim", "statement", "observed", "note"):
        table.add_column(column)
    for claim in report.claims:
        table.add_row(
            CLAIM_MARKS[claim.status],
            escape(claim.label),
            escape(claim.statement),
            escape(claim.observed),
            escape(claim.note or ""),
        )
    console.print(table)
    counts = {status: sum(c.status == status for c in report.claims) for status in ClaimStatus}
    console.print(
        f"{counts[ClaimStatus.PASS]} pass, {counts[ClaimStatus.DEVIATION]} deviation, "
        f"{counts[ClaimStatus.FAIL]} fail"
    )
    _print_findings(report.findings)


@app.command("reproduce")
def reproduce_cmd(
    example: Annotated[int, typer.Argument(help=f"Example number, one of {sorted(EXAMPLES)}")],
    budget: BudgetOpt = None,
    fmt: FormatOpt = "table",
) -> None:
    """Recompute a registered example and grade each published claim."""
    _check_format(fmt)
    try:
        report = reproduce(example, budget)
    except OracleDisagreementError as e:
        _fail(str(e), EXIT_DISAGREEMENT)
    except EtgrsError as e:
        _fail(str(e))
    if fmt == "json":
        typer.echo(report.model_dump_json(indent=2))
    else:
        _render_reproduction(report)
    if not report.passed:
        raise typer.Exit(EXIT_DISAGREEMENT)


def _vector_text(values: FieldArray) -> str:
    return " ".join(str(x) for x in values.view(np.ndarray).tolist())


@app.command()
def matrix(
    field: FieldOpt,
    k: KOpt,
    alpha: AlphaOpt,
    eta: EtaOpt,
    delta: DeltaOpt,
    n: NOpt = None,
    v: VOpt = None,
    which: Annotated[str, typer.Option("--which", help=f"One of {', '.join(MATRIX_CHOICES)}")] = "G",
) -> None:
    """Print a generator, parity-check or extension vector in plain text."""
    if which not in MATRIX_CHOICES:
        _fail(f"--which must be one of {', '.join(MATRIX_CHOICES)}, got {which!r}")
    params = _build_params(field, n, k, alpha, v, eta, delta)
    generator = generator_matrix(params)
    match which:
        case "G":
            typer.echo(format_matrix(generator))
        case "G1":
            typer.echo(format_matrix(punctured_generator(params)))
        case "t":
            extension = extension_vector(params)
            typer.echo(" ".join(str(x) for x in extension.t))
            typer.echo(f"contract: {'ok' if extension.contract_ok else 'FAILED'} ({extension.via})")
        case "dual":
            parity = LinearCode(generator).parity_check()
            typer.echo(format_matrix(parity))
            orthogonal = not np.any((generator @ parity.T).view(np.ndarray))
            typer.echo(f"G H^T = 0: {'ok' if orthogonal else 'FAILED'}")
        case _:
            square = LinearCode(generator).schur_square()
            typer.echo(format_matrix(square.generator))
            typer.echo(f"dimension: {square.dimension}")


@app.command()
def schema() -> None:
    """Print the JSON schema of the classify report."""
    typer.echo(json.dumps(report_schema(), indent=2, sort_keys=True))


def main() -> None:
    """Console entry point; usage errors exit 1, disagreements and failed claims exit 2."""
    try:
        code = app(standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        sys.exit(EXIT_USAGE)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    except EtgrsError as e:
        err_console.print(f"[bold red]Error:[/bold red] {escape(str(e))}")
        sys.exit(EXIT_USAGE)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
