# src/qopolars/cli/commands.py
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click

from qopolars.cli.render import FORMATS, render_report, render_tree, to_json_text
from qopolars.polar.contacts import p_contact
from qopolars.polar.profiler import PolarProfiler, degree_table, format_degree_table
from qopolars.polytope.newton import canonical_decomposition, is_polygonal, newton_polytope, rond_schober_reducible
from qopolars.roots.types import RootSet
from qopolars.series.literal import parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.types import KuoLuTree
from qopolars.utils.errors import IndeterminateError, InputSemanticError, PolytopeError, QOError
from qopolars.utils.example_utils import setup
from qopolars.utils.setup_utils import Settings, setup_environment
from qopolars.verify.oracles import default_substitutions
from qopolars.verify.runner import VerificationRunner

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        click.echo(f"Saved to {output}", err=True)
    else:
        click.echo(text)


def _fail(error: Exception) -> None:
    """Diagnostic on stderr, then the exit code of the error class."""
    code = getattr(error, "exit_code", 1)
    logger.error(f"{type(error).__name__}: {str(error)}")
    click.echo(f"error: {str(error)}", err=True)
    sys.exit(code)


def _load(ctx: click.Context, path: str):
    settings: Settings = ctx.obj["settings"]
    return setup(path, settings)


def _select(roots: RootSet, tree: KuoLuTree, selection: str, names: Sequence[str]):
    """A comma-separated branch subset, or a polynomial literal in y."""
    labels = [s.strip() for s in selection.split(",") if s.strip()]
    known = {b.label for b in roots.branches}
    if labels and all(label in known for label in labels):
        indices = [i for label in labels for i in roots.indices_of(label)]
        return roots.polynomial(labels), [tree.roots[i] for i in indices]
    if "y" not in selection:
        raise InputSemanticError(f"{selection!r} is neither a branch name ({', '.join(sorted(known))}) nor a polynomial in y")
    return parse_series_poly(selection, names), None


@click.group()
@click.pass_context
def cli(ctx):
    """Polars of quasi-ordinary polynomials: trees, predictions and exact checks."""
    try:
        settings = setup_environment()
    except QOError as e:
        _fail(e)
    logging.basicConfig(level=settings.log_level, format=LOG_FORMAT)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", help="Output format")
@click.option("--output", "-o", type=click.Path(), help="Write the rendering to a file")
@click.pass_context
def tree(ctx, path, fmt, output):
    """Render the Kuo-Lu and Eggers trees of the input."""
    try:
        problem, roots, kuo_lu, eggers, f = _load(ctx, path)
        _emit(render_tree(kuo_lu, eggers, roots, fmt), output)
    except (QOError, ValueError) as e:
        _fail(e)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-k", "k", type=int, help="Order of the polar (all orders when omitted)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Output format")
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file")
@click.pass_context
def polar(ctx, path, k, fmt, output):
    """Predictions for the k-th polar: factor degrees, characteristic polynomials, contacts."""
    try:
        problem, roots, kuo_lu, eggers, f = _load(ctx, path)
        ks = [k] if k else list(range(1, kuo_lu.degree))
        profiles = [PolarProfiler(kuo_lu, eggers, roots, order) for order in ks]
        table = degree_table(kuo_lu, eggers, ks)
        if fmt == "json":
            data = {
                "input": problem.source,
                "degree": kuo_lu.degree,
                "profiles": [p.generate_profile().to_json() for p in profiles],
                "degree_table": {str(order): row for order, row in table.items()},
            }
            _emit(to_json_text(data), output)
        else:
            sections = [p.get_profile_summary() for p in profiles]
            sections.append("Degree table:\n" + format_degree_table(table))
            _emit("\n\n".join(sections), output)
    except (QOError, ValueError) as e:
        _fail(e)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("g")
@click.argument("p")
@click.option("--output", "-o", type=click.Path(), help="Write the result to a file")
@click.pass_context
def contact(ctx, path, g, p, output):
    """P-contact cont_P(G, P) of branch subsets (f1,f2) or polynomials in y."""
    try:
        problem, roots, kuo_lu, eggers, f = _load(ctx, path)
        g_poly, g_roots = _select(roots, kuo_lu, g, problem.names)
        p_poly, p_roots = _select(roots, kuo_lu, p, problem.names)
        value = p_contact(g_poly, p_poly, roots_of_p=p_roots, roots_of_g=g_roots)
        _emit(f"cont_P({g}, {p}) = {value.describe()}", output)
    except (QOError, ValueError) as e:
        _fail(e)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--poly", "poly", help="Polynomial in y; defaults to the input polynomial")
@click.option("--branches", "branches", help="Comma-separated branch subset")
@click.option("--output", "-o", type=click.Path(), help="Write the result to a file")
@click.pass_context
def polytope(ctx, path, poly, branches, output):
    """Newton polytope, elementary decomposition and reducibility certificate."""
    try:
        problem, roots, kuo_lu, eggers, f = _load(ctx, path)
        if poly:
            g = parse_series_poly(poly, problem.names)
        elif branches:
            g, _ = _select(roots, kuo_lu, branches, problem.names)
        else:
            g = f
        _emit(_polytope_summary(g), output)
    except (QOError, ValueError) as e:
        _fail(e)


def _polytope_summary(g: SeriesYPoly) -> str:
    region = newton_polytope(g)
    lines = [f"Δ({g}) = {region.describe()}"]
    try:
        parts = canonical_decomposition(region)
        lines.append("decomposition: " + " + ".join(e.describe() for e in parts))
    except PolytopeError as e:
        lines.append(f"decomposition: {str(e)}")
    lines.append(f"polygonal: {'yes' if is_polygonal(region) else 'no'}")
    if g.degree >= 2 and g.is_weierstrass():
        certificate = rond_schober_reducible(g)
        if certificate is None:
            lines.append("reducibility: no certificate")
        else:
            lines.append(f"reducibility: reducible (q={certificate.q}, i0={certificate.i0})")
    return "\n".join(lines)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-k", "k", type=int, required=True, help="Order of the polar")
@click.option("--subs", "subs", type=int, help="Number of substitution vectors to try")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Output format")
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file")
@click.pass_context
def verify(ctx, path, k, subs, fmt, output):
    """Check the k-th polar predictions against exact oracles."""
    settings: Settings = ctx.obj["settings"]
    try:
        problem, roots, kuo_lu, eggers, f = _load(ctx, path)
        batch: Optional[List] = settings.substitutions
        if subs:
            batch = default_substitutions(kuo_lu.nvars, subs)
        runner = VerificationRunner(
            kuo_lu, eggers, roots, f, k, problem.precision, batch, settings.exact_resultant_max
        )
        report = runner.run_all()
    except (QOError, ValueError) as e:
        _fail(e)
        return

    _emit(to_json_text(report.to_json()) if fmt == "json" else render_report(report), output)
    if report.violations:
        click.echo(f"hypothesis violated: {'; '.join(report.violations)}", err=True)
        sys.exit(2)
    backed = [e for e in report.mismatches if e.theorem_backed]
    if backed:
        click.echo(f"bug: {len(backed)} theorem-backed claim(s) contradicted by an oracle", err=True)
        sys.exit(1)
    if report.indeterminate:
        click.echo("inconclusive: precision too low to settle any claim, raise QO_PRECISION", err=True)
        sys.exit(IndeterminateError.exit_code)


if __name__ == "__main__":
    cli()
