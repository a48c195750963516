"""zorder CLI - main entry point.

Results go to standard output (as a table or as JSON with --format json), diagnostics to the error
stream. Exit codes: 0 success, 1 negative answer or disagreement (not a lattice, join/meet missing,
verify disagreements), 2 usage errors and invalid input, 3 resource cap exceeded, 4 theorem
violation.

Examples:
  zorder classify 12
  zorder hasse 8 --format dot
  zorder lattice 9 --check
  zorder verify 1 200 --jobs 4 --out reports/verify_report.json
"""

import os
from dataclasses import asdict, replace
from typing import Any

import click

import zorder.common.zorder.src.config as conf
from zorder.common.zorder.src import zorder_logging as logging
from zorder.common.zorder.src.initialization import initialize_zorder
from zorder.common.zorder.src.utils.json_utils import dumps
from zorder.ring_order.src import oracle, poset, render, structure
from zorder.ring_order.src.errors import (
    CapExceededError,
    InvalidResidueError,
    TheoremViolationError,
    ZorderError,
)
from zorder.ring_order.src.verify import VerifyCampaign

CONFIG_FILES = conf.BASE_CONFIG_FILES

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_THEOREM = 4


class ZorderGroup(click.Group):
    """Command group that maps domain errors to the documented exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CapExceededError as e:
            _fail(e, EXIT_CAP)
        except TheoremViolationError as e:
            _fail(e, EXIT_THEOREM)
        except (ZorderError, ValueError) as e:
            _fail(e, EXIT_USAGE)


def _fail(error: Exception, code: int):
    logging.get_zorder_logger(__name__).debug("Command failed", exc_info=error)
    click.echo(f"Error: {error}", err=True)
    raise click.exceptions.Exit(code)


def _context(n: int, *residues: int) -> poset.ZnContext:
    ctx = poset.make_context(n)
    for a in residues:
        try:
            poset.check_residue(ctx, a)
        except InvalidResidueError as e:
            raise click.BadParameter(str(e)) from e
    return ctx


def _override(name: str, value: int | None) -> int | None:
    if value is not None:
        logging.get_zorder_logger(__name__).warning(
            "Cap %s overridden: %d instead of %d", name, value, conf.get_cap(name)
        )
    return value


def _emit(ctx: click.Context, payload: dict[str, Any], text: str) -> None:
    if ctx.obj["format"] == "json":
        click.echo(dumps(render.with_schema(payload)))
    else:
        click.echo(text, nl=not text.endswith("\n"))


@click.group(cls=ZorderGroup)
@click.version_option(package_name="zorder")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", help="Output format.")
@click.option("--quiet", is_flag=True, help="Only log errors.")
@click.option("--env", default=None, help="Environment name (overrides ZORDER_ENV).")
@click.pass_context
def main(ctx: click.Context, fmt: str, quiet: bool, env: str | None):
    """zorder: the multiplicative partial order on Z_n.

    a <= b iff a = b or a*b = a (mod n). Classify residues, draw Hasse diagrams, compute joins,
    meets and covering projections, decide latticehood and cross-check everything against a
    brute-force oracle.
    """
    if env:
        os.environ[conf.BASE_ENV_VARIABLE] = env
    initialize_zorder(CONFIG_FILES, console_level="error" if quiet else None)
    ctx.obj = {"format": fmt}


@main.command()
@click.argument("n", type=int)
@click.argument("a", type=int, required=False)
@click.pass_context
def classify(ctx: click.Context, n: int, a: int | None):
    """Classification flags of A, or of every residue of Z_N (at most caps.table residues)."""
    zn = _context(n) if a is None else _context(n, a)
    sets = poset.element_sets(zn) if a is None else None
    residues = range(n) if a is None else [a]
    rows = [{"a": x, **asdict(poset.classify(zn, x))} for x in residues]

    payload: dict[str, Any] = {"n": n, "rows": rows}
    text = render.table(rows)
    if sets is not None:
        payload["sets"] = {"gp": sets.gp, "p": sets.p, "u": sets.u, "n": sets.n}
        text += "".join(
            f"{label} = {render.format_set(values)}\n"
            for label, values in (("GP", sets.gp), ("P", sets.p), ("U", sets.u), ("N", sets.n))
        )
    _emit(ctx, payload, text)


@main.command()
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["dot", "ascii", "json"]), default="dot", help="Diagram format.")
@click.option("--cap", type=int, default=None, help="Override the hasse cap.")
def hasse(n: int, fmt: str, cap: int | None):
    """Hasse diagram of (Z_N, <=)."""
    diagram = poset.hasse(_context(n), cap=_override("hasse", cap))
    match fmt:
        case "dot":
            click.echo(render.hasse_to_dot(diagram), nl=False)
        case "ascii":
            click.echo(render.hasse_to_ascii(diagram), nl=False)
        case "json":
            click.echo(dumps(render.hasse_to_payload(diagram)))


@main.command()
@click.argument("n", type=int)
@click.option("--check", is_flag=True, help="Cross-check the verdict with the brute-force oracle.")
@click.option("--oracle-cap", type=int, default=None, help="Override the oracle_lattice cap.")
@click.pass_context
def lattice(ctx: click.Context, n: int, check: bool, oracle_cap: int | None):
    """Decide whether Z_N is a lattice (exit 1 if not)."""
    zn = _context(n)
    report = structure.is_lattice(zn)
    if check:
        brute = oracle.brute_is_lattice(zn, cap=_override("oracle_lattice", oracle_cap))
        report = replace(report, oracle_agrees=brute.is_lattice == report.verdict)

    if report.verdict:
        text = "lattice"
    else:
        text = f"not a lattice; failing ideal ({report.failing_n1}); witness {report.witness}"
    if report.oracle_agrees is not None:
        text += f"\noracle agrees: {'yes' if report.oracle_agrees else 'no'}"

    payload = {
        "n": n,
        "is_lattice": report.verdict,
        "failing_n1": report.failing_n1,
        "witness": report.witness,
        "fast_path": report.fast_path,
        "oracle_agrees": report.oracle_agrees,
    }
    _emit(ctx, payload, text)

    if not report.verdict or report.oracle_agrees is False:
        ctx.exit(EXIT_NEGATIVE)


def _join_or_meet(ctx: click.Context, op: str, n: int, a: int, b: int):
    zn = _context(n, a, b)
    res = structure.join(zn, a, b) if op == "join" else structure.meet(zn, a, b)
    symbol = "v" if op == "join" else "^"

    text = f"{a} {symbol} {b} = {res.value}" if res.exists else f"{a} {symbol} {b} does not exist"
    text += f" ({res.path.value}" + (f", d = {res.d})" if res.d is not None else ")")
    payload = {"n": n, "a": a, "b": b, "op": op, "exists": res.exists, "value": res.value, "path": res.path, "d": res.d}
    _emit(ctx, payload, text)

    if not res.exists:
        ctx.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("n", type=int)
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.pass_context
def join(ctx: click.Context, n: int, a: int, b: int):
    """Join A v B in Z_N (exit 1 if it does not exist)."""
    _join_or_meet(ctx, "join", n, a, b)


@main.command()
@click.argument("n", type=int)
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.pass_context
def meet(ctx: click.Context, n: int, a: int, b: int):
    """Meet A ^ B in Z_N (exit 1 if it does not exist)."""
    _join_or_meet(ctx, "meet", n, a, b)


@main.command()
@click.argument("n", type=int)
@click.argument("a", type=int)
@click.pass_context
def projections(ctx: click.Context, n: int, a: int):
    """Upper and lower covering projections of the generalized projection A.

    The oracle values are only computed while N is within the oracle_lattice cap.
    """
    zn = _context(n, a)
    upper_formula = structure.upper_covering_projection(zn, a)
    upper_power = structure.upper_covering_via_power(zn, a)
    lower_formula = structure.lower_covering_projection(zn, a)

    lower_oracle = upper_oracle = None
    if n <= conf.get_cap("oracle_lattice"):
        lower_oracle, upper_oracle = oracle.brute_covering_projections(zn, a)

    agree = upper_formula == upper_power and (
        upper_oracle is None or (upper_oracle == upper_formula and lower_oracle == lower_formula)
    )
    text = (
        f"a_u = {upper_formula} (formula), {upper_power} (power), {upper_oracle} (oracle)\n"
        f"a_l = {lower_formula} (formula), {lower_oracle} (oracle)"
    )
    payload = {
        "n": n,
        "a": a,
        "upper_formula": upper_formula,
        "upper_power": upper_power,
        "lower_formula": lower_formula,
        "upper_oracle": upper_oracle,
        "lower_oracle": lower_oracle,
        "agree": agree,
    }
    _emit(ctx, payload, text)

    if not agree:
        logging.get_zorder_logger(__name__).error("Covering projections of %d in Z_%d disagree", a, n)
        ctx.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("n", type=int)
@click.argument("a", type=int)
@click.pass_context
def covers(ctx: click.Context, n: int, a: int):
    """Lower and upper covers of A in (Z_N, <=)."""
    zn = _context(n, a)
    res = poset.covers(zn, a)
    text = (
        f"lower covers: {render.format_set(res.lower)}{' (unique)' if len(res.lower) == 1 else ''}\n"
        f"upper covers: {render.format_set(res.upper)}{' (unique)' if len(res.upper) == 1 else ''}"
    )
    _emit(ctx, {"n": n, "a": a, "lower_covers": res.lower, "upper_covers": res.upper}, text)


@main.command()
@click.argument("lo", type=int)
@click.argument("hi", type=int)
@click.option("--jobs", type=int, default=None, help="Worker processes (default: verify.jobs).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report to this file.")
@click.option("--pair-cap", type=int, default=None, help="Override the pair_check cap.")
@click.option("--oracle-cap", type=int, default=None, help="Override the oracle_lattice cap.")
@click.pass_context
def verify(
    ctx: click.Context, lo: int, hi: int, jobs: int | None, out: str | None, pair_cap: int | None, oracle_cap: int | None
):
    """Cross-check theorems and oracle for every n in [LO, HI] (exit 1 on disagreement)."""
    campaign = VerifyCampaign(
        lo=lo,
        hi=hi,
        jobs=jobs if jobs is not None else conf.settings["verify"]["jobs"],
        out=out,
        pair_cap=_override("pair_check", pair_cap),
        oracle_cap=_override("oracle_lattice", oracle_cap),
    )
    report = campaign.run()

    rows = [
        {key: row[key] for key in ("n", "is_lattice_theorem", "is_lattice_oracle", "agree", "failing_n1")}
        for row in report.per_n
    ]
    summary = report.summary
    text = render.table(rows) + " ".join(f"{key}={value}" for key, value in summary.items())
    if ctx.obj["format"] == "json":
        click.echo(dumps(report.to_payload()))
    else:
        click.echo(text)

    if summary["disagreements"] > 0:
        ctx.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("lo", type=int)
@click.argument("hi", type=int)
@click.pass_context
def scan(ctx: click.Context, lo: int, hi: int):
    """Moduli n in [LO, HI] for which Z_n is a lattice (theorem-based only)."""
    lattices = structure.lattice_moduli(lo, hi)
    _emit(ctx, {"range": [lo, hi], "lattices": lattices}, "".join(f"{n}\n" for n in lattices))


if __name__ == "__main__":
    main()  # pylint: disable=no-value-for-parameter
