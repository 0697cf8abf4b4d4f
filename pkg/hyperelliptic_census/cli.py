"""
Command-line interface for the hyperelliptic curve census.
"""

import functools
import json
import logging
import sys
from typing import Any, Dict, Optional, Sequence, Tuple

import click
import pandas as pd
import yaml
from pydantic import ValidationError

from . import __version__
from .algebra.gf2n import parse_field
from .algebra.polyring import parse
from .arithmetic.weil import is_weil_poly, residue_pattern, two_rank
from .arithmetic.zeta import count_vector
from .core.census import is_hyperelliptic
from .core.errors import CensusError, CensusIOError, MalformedInputError
from .core.models import Curve, RunConfig, VStats, WeilPoly
from .core.streaming import CensusStreamer


def handle_errors(func):
    """Report CensusError as a one-line message and exit with its code."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CensusError as e:
            click.echo(f"❌ {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def _default_map(group: click.Group, data: Dict[str, Any]) -> Dict[str, Any]:
    """Config-file values as click defaults, so explicit flags still win."""
    out: Dict[str, Any] = {}
    for name, command in group.commands.items():
        if isinstance(command, click.Group):
            out[name] = _default_map(command, data)
        else:
            params = {p.name: p for p in command.params}
            out[name] = {k: v for k, v in data.items()
                         if k in params and v is not None and _accepts(params[k], v)}
    return out


def _accepts(param: click.Parameter, value: Any) -> bool:
    choice = param.type
    return not isinstance(choice, click.Choice) or value in choice.choices


def _load_config(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise CensusIOError(f"cannot read config {path}: {e}") from e
    except yaml.YAMLError as e:
        raise MalformedInputError(f"invalid YAML in {path}: {e}") from None
    if not isinstance(data, dict):
        raise MalformedInputError(f"config {path} must be a mapping")
    _run_config(**data)
    return data


def _run_config(**kwargs) -> RunConfig:
    try:
        return RunConfig(**kwargs)
    except ValidationError as e:
        raise MalformedInputError(str(e)) from None


def _int_csv(text: str, what: str):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise MalformedInputError(f"{what} must be comma-separated integers, got {text!r}") from None


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(), help="YAML file with default options")
@click.option("--verbose", "-v", count=True, help="Log more (-v info, -vv debug)")
@click.pass_context
@handle_errors
def cli(ctx: click.Context, config_path: Optional[str], verbose: int):
    """Hyperelliptic curve census in characteristic 2."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    if config_path:
        ctx.default_map = _default_map(cli, _load_config(config_path))


@cli.command(name="enumerate")
@click.option("--genus", type=int, default=3, help="Genus g of the curves")
@click.option("--n", type=int, default=1, help="Field degree: enumerate over GF(2^n)")
@click.option("--with-counts", type=int, help="Store point counts N_1..N_K (K >= g adds Weil data)")
@click.option("--jobs", type=int, help="Worker processes (default: env or all cores)")
@click.option("--out", "output", help="Output file (default: stdout)")
@click.option("--format", "format", type=click.Choice(["jsonl", "csv"]), default="jsonl")
@click.option("--field-poly", help="Field modulus as an integer literal, e.g. 0x13")
@handle_errors
def enumerate_cmd(genus: int, n: int, with_counts: Optional[int], jobs: Optional[int],
                  output: Optional[str], format: str, field_poly: Optional[str]):
    """Enumerate isomorphism classes of genus-g curves over GF(2^n)."""
    config = _run_config(subcommand="enumerate", genus=genus, n=n, jobs=jobs, output=output,
                         format=format, with_counts=with_counts, field_poly=field_poly)
    config.require_enumerable()

    click.echo(f"🚀 Enumerating genus {genus} over GF(2^{n})...", err=True)

    def progress(stats: VStats) -> None:
        click.echo(f"   v={stats.v}: {stats.classes} classes "
                   f"({stats.orbits} orbits, |Stab|={stats.stabilizer_size})", err=True)

    streamer = CensusStreamer(config)
    records = streamer.run(progress)
    streamer.write(records, sys.stdout)

    click.echo(f"✅ {len(records)} classes in {streamer.elapsed:.2f}s", err=True)
    if output:
        click.echo(f"📄 Rows saved to {output}", err=True)


@cli.command()
@click.option("--genus", type=int, required=True, help="Genus g")
@click.option("--max-ext", type=int, help="Largest extension degree used (default 2g)")
@click.option("--higher-power", is_flag=True, help="Also use congruences mod 2^(v2(k)+1)")
@click.option("--all", "show_all", is_flag=True, help="Report every pattern with its verdict")
@click.option("--format", "format", type=click.Choice(["text", "csv"]), default="text")
@handle_errors
def obstructions(genus: int, max_ext: Optional[int], higher_power: bool, show_all: bool, format: str):
    """List residue patterns that no hyperelliptic Jacobian can have."""
    from .obstructions.obstruct import obstruction_reports

    if genus < 1:
        raise MalformedInputError(f"genus must be at least 1, got {genus}")
    reports = obstruction_reports(genus, max_ext, higher_power)
    if not show_all:
        reports = [r for r in reports if r.obstructed]

    if format == "csv":
        frame = pd.DataFrame([{
            "pattern": str(r.pattern),
            "verdict": r.verdict.value,
            "witness": " ".join(str(d) for d in r.witness) if r.witness else "",
            "certificates": _certificate_text(r.certificates),
        } for r in reports], columns=["pattern", "verdict", "witness", "certificates"])
        click.echo(frame.to_csv(index=False), nl=False)
        return
    for r in reports:
        witness = ",".join(str(d) for d in r.witness) if r.witness else "none"
        certificates = _certificate_text(r.certificates) or "none"
        click.echo(f"{r.pattern} {r.verdict.value} witness={witness} certificates={certificates}")


def _certificate_text(certificates: Sequence[Tuple[int, int, int]]) -> str:
    return ";".join("k=%d mod %d N=%d" % c for c in certificates)


@cli.command()
@click.option("--genus", type=int, required=True)
@click.option("--n", type=int, default=1)
@click.option("--v", "v_text", required=True, help="Coefficients of v, constant term first")
@click.option("--u", "u_text", required=True, help="Coefficients of u, constant term first")
@click.option("--ext", type=int, default=1, help="Count over GF(q^k) for k = 1..ext")
@click.option("--field-poly", help="Field modulus as an integer literal")
@handle_errors
def count(genus: int, n: int, v_text: str, u_text: str, ext: int, field_poly: Optional[str]):
    """Point counts N_1..N_ext of y^2 + v y = u."""
    F = parse_field(n, field_poly)
    v, u = parse(v_text, F), parse(u_text, F)
    if v.is_zero():
        raise MalformedInputError("v must be nonzero")
    if not is_hyperelliptic(v, u, genus):
        click.echo(f"⚠️  y^2 + ({v}) y = {u} is not a smooth genus-{genus} curve", err=True)
    cv = count_vector(Curve(v, u, genus), ext)
    click.echo("N=[" + ",".join(str(N) for N in cv.counts) + "]")


@cli.command()
@click.option("--q", type=int, required=True)
@click.option("--genus", type=int, required=True)
@click.option("--coeffs", required=True, help="a_1,...,a_g")
@click.option("--higher-power", is_flag=True, help="Judge the pattern with higher-power congruences")
@handle_errors
def weil(q: int, genus: int, coeffs: str, higher_power: bool):
    """Check a candidate Weil polynomial and its residue pattern."""
    from .obstructions.obstruct import pattern_is_obstruction

    a = _int_csv(coeffs, "--coeffs")
    if len(a) != genus:
        raise MalformedInputError(f"expected {genus} coefficients, got {len(a)}")
    if q < 2 or q & (q - 1):
        raise MalformedInputError(f"q must be a power of two, got {q}")
    w = WeilPoly(q, tuple(a))
    pattern = residue_pattern(w)
    report = pattern_is_obstruction(pattern, higher_power=higher_power)
    click.echo(f"valid: {'yes' if is_weil_poly(w) else 'no'}")
    click.echo(f"two_rank: {two_rank(w)}")
    click.echo(f"pattern: {pattern}")
    click.echo(f"verdict: {report.verdict.value}")


@cli.group()
def stats():
    """Distribution of Weil polynomials by residue class."""


@stats.command()
@click.option("--n", type=int, required=True, help="q = 2^n")
@click.option("--tau", is_flag=True, help="Add the obstructed-share columns")
@click.option("--method", type=click.Choice(["lattice", "scan"]), default="lattice", show_default=True,
              help="Closed-region lattice count or exhaustive scan")
@click.option("--jobs", type=int, default=1)
@click.option("--out", "output", help="CSV file (default: stdout)")
@handle_errors
def w3(n: int, tau: bool, method: str, jobs: int, output: Optional[str]):
    """Genus-3 class counts over GF(2^n) as one CSV row."""
    from .analysis.stats import isogeny_count_estimate, w3_summary

    click.echo(f"📊 Counting genus-3 Weil polynomials for q=2^{n}...", err=True)
    frame = w3_summary([n], jobs=jobs, with_tau=tau, method=method)
    click.echo(f"   leading-order estimate: {isogeny_count_estimate(3, 1 << n)}", err=True)
    _emit_frame(frame, output)


@stats.command()
@click.option("--n", type=int, default=1, help="q = 2^n")
@click.option("--out", "output", help="CSV file (default: stdout)")
@handle_errors
def tau4(n: int, output: Optional[str]):
    """Genus-4 pattern counts by exhaustive scan, with the obstructed share."""
    from .analysis.stats import pattern_counts_frame, tau4 as tau4_ratio, weil_scan

    q = 1 << n
    _emit_frame(pattern_counts_frame(weil_scan(4, q), q), output)
    ordinary, total = tau4_ratio(q)
    click.echo(f"tau4 ordinary={float(ordinary):.4f} ({ordinary}) all={float(total):.4f}", err=True)


@stats.command()
@click.option("--max-genus", type=int, required=True)
@click.option("--max-ext", type=int)
@click.option("--out", "output", help="CSV file (default: stdout)")
@handle_errors
def proportions(max_genus: int, max_ext: Optional[int], output: Optional[str]):
    """Share of obstructed residue patterns per genus."""
    from .obstructions.obstruct import obstruction_proportions

    _emit_frame(pd.DataFrame(obstruction_proportions(max_genus, max_ext)), output)


def _emit_frame(frame: pd.DataFrame, output: Optional[str]) -> None:
    if not output:
        click.echo(frame.to_csv(index=False), nl=False)
        return
    try:
        frame.to_csv(output, index=False)
    except OSError as e:
        raise CensusIOError(f"cannot write {output}: {e}") from e
    click.echo(f"📄 Table saved to {output}", err=True)


@cli.command()
@click.option("--in", "input_path", required=True, help="Census file (.jsonl or .csv)")
@click.option("--max-ext", type=int, help="Recount up to this extension degree")
@click.option("--higher-power/--basic", default=True, help="Obstruction list used for soundness")
@click.option("--report", "-o", help="Write the full JSON report here")
@handle_errors
def verify(input_path: str, max_ext: Optional[int], higher_power: bool, report: Optional[str]):
    """Run the invariant suite on a census file."""
    from .validation.validators import CensusValidator

    click.echo(f"🔍 Verifying {input_path}...", err=True)
    result = CensusValidator(max_ext=max_ext, higher_power=higher_power).validate_file(input_path)

    if report:
        try:
            with open(report, "w") as f:
                json.dump(result, f, indent=2, default=str)
        except OSError as e:
            raise CensusIOError(f"cannot write {report}: {e}") from e

    summary = result["summary"]
    click.echo("📊 Verification Summary:")
    click.echo(f"   Total records: {summary['total_records']:,}")
    click.echo(f"   Valid records: {summary['valid_records']:,}")
    click.echo(f"   Invalid records: {summary['invalid_records']:,}")
    for pattern, hits in summary["conjecture_evidence"].items():
        click.echo(f"   Conjectured pattern {pattern}: {hits} curves")
    failed = {k: v for k, v in result["checks"].items() if v}
    if failed:
        click.echo(f"❌ Verification failed: {failed}")
        sys.exit(1)
    click.echo("✅ All invariants hold!")


@cli.command()
@click.option("--genus", type=int, default=3)
@click.option("--degrees", default="1,2,3", help="Comma-separated field degrees n")
@click.option("--iterations", type=int, default=3)
@click.option("--jobs", type=int, default=1)
@click.option("--output", "-o", default="./benchmark_results.json")
@handle_errors
def benchmark(genus: int, degrees: str, iterations: int, jobs: int, output: str):
    """Time the census across field degrees and check the growth band."""
    from .benchmarks.performance import PerformanceBenchmark, growth_failed

    degree_list = _int_csv(degrees, "--degrees")
    click.echo("🏃 Running performance benchmarks...")
    click.echo(f"   Genus: {genus}")
    click.echo(f"   Degrees: {degree_list}")
    click.echo(f"   Iterations: {iterations}")

    results = PerformanceBenchmark(jobs=jobs).run_benchmarks(genus, degree_list, iterations)
    try:
        with open(output, "w") as f:
            json.dump(results, f, indent=2, default=str)
    except OSError as e:
        raise CensusIOError(f"cannot write {output}: {e}") from e

    click.echo("\n📊 Benchmark Results:")
    for n, result in results["degrees"].items():
        if "skipped" in result:
            click.echo(f"   n={n}: skipped ({result['skipped']})")
            continue
        click.echo(f"   n={n}:")
        click.echo(f"     Avg time: {result['avg_time']:.2f}s")
        click.echo(f"     Classes: {result['avg_classes']:.0f}")
        click.echo(f"     Avg memory: {result['avg_memory']:.1f}MB")
    for entry in results["growth"]:
        click.echo(f"   n={entry['from']}->{entry['to']}: x{entry['ratio']:.1f} ({entry['status']})")

    click.echo(f"📄 Detailed results saved to {output}")
    bad = growth_failed(results)
    if bad:
        click.echo(f"❌ Growth ratio {bad['ratio']:.1f} outside [8, 128]")
        sys.exit(1)


TEMPLATE_HEADER = """\
# hyperelliptic-census configuration
# Pass with: hyperelliptic-census --config <file> <command>
# Command-line flags override values set here.
# jobs: null uses HYPERELLIPTIC_CENSUS_JOBS, else every core.
"""


@cli.command()
@click.option("--output", "-o", default="hyperelliptic_census.yaml")
@handle_errors
def config_template(output: str):
    """Generate a template configuration file."""
    template = RunConfig().model_dump()
    template.pop("subcommand")
    try:
        with open(output, "w") as f:
            f.write(TEMPLATE_HEADER)
            yaml.dump(template, f, default_flow_style=False, indent=2)
    except OSError as e:
        raise CensusIOError(f"cannot write {output}: {e}") from e

    click.echo(f"📝 Configuration template saved to {output}")
    click.echo("Edit this file to customize your census runs.")


if __name__ == "__main__":
    cli()
