#!/usr/bin/env python3
"""Acyclic Edge Coloring CLI Tool.

Colors planar graphs acyclically with at most max degree + 7 colors,
verifies colorings, locates reducible configurations, runs the
discharging ledger, computes exact indices of small graphs and generates
and runs the test corpus.
"""

import json
import sys
from typing import List, Optional, Sequence

import click
from rich.console import Console

from analysis.acyclic import verify_acyclic
from analysis.discharging import discharge, needs_manual_review
from config import (
    CORPUS_ORACLE_EDGES,
    FALLBACK_RADIUS,
    ORACLE_K_MAX,
    REPORT_NAME,
    RunConfig,
)
from corpus import CorpusRunner
from detectors import check_configuration, find_configuration
from generators import GENERATORS, FAMILY_ALIASES, default_corpus, get_generator
from models.errors import (
    AcyclicToolkitError,
    ExtensionFailedError,
    ImproperColoringError,
    NoConfigurationError,
    PaletteTooSmallError,
)
from solver import Colorizer, exact_acyclic_index
from utils.display import DisplayFormatter
from utils.fileio import (
    read_coloring,
    read_graph,
    witness_dot,
    write_coloring,
    write_dot,
    write_graph,
    write_json,
    write_jsonl,
    write_trace,
)
from utils.log import setup_logging

console = Console()
formatter = DisplayFormatter(console)
errors = DisplayFormatter(Console(stderr=True))

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_CONFIGURATION = 2
EXIT_EXTENSION_FAILED = 3
EXIT_REJECTED = 4

GRAPH_FILE = click.Path(exists=True, dir_okay=False)


def settings_for(command: str, **overrides) -> RunConfig:
    """RunConfig for ``command``, carrying the group's verbosity."""
    ctx = click.get_current_context(silent=True)
    obj = ctx.find_root().obj if ctx is not None else None
    verbosity = (obj or {}).get("verbosity", 0)
    return RunConfig.from_env(command, verbosity=verbosity, **overrides)


def parse_seeds(value: Optional[str]) -> Optional[List[int]]:
    """Parse a comma-separated seed list like ``1,2,3``."""
    if value is None:
        return None
    try:
        seeds = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"seeds must be comma-separated integers, got {value!r}")
    if not seeds:
        raise click.BadParameter("at least one seed is required")
    return seeds


@click.group()
@click.option("--verbose", "-v", count=True, help="Log more (repeat for debug output)")
@click.pass_context
def cli(ctx: click.Context, verbose: int):
    """Acyclic edge coloring of planar graphs with max degree + 7 colors.

    Examples:

        # Generate, color and verify an icosahedron
        python main.py gen icosahedron --out ico.g
        python main.py color ico.g --out ico.c
        python main.py verify ico.g ico.c --k 12

        # Run the full corpus on four workers
        python main.py corpus-run --jobs 4 --report corpus.jsonl
    """
    setup_logging(verbose)
    ctx.obj = {"verbosity": verbose}


@cli.command()
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("--out", "-o", type=click.Path(dir_okay=False), help="Write the coloring here")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), help="Write one JSON line per extension step")
@click.option("--fallback-radius", type=click.IntRange(min=0), default=FALLBACK_RADIUS, show_default=True, help="Edges the fallback search may recolor")
@click.option("--strict", is_flag=True, help="Run full verification after every extension step")
def color(graph_file: str, out: Optional[str], trace_path: Optional[str], fallback_radius: int, strict: bool):
    """Color GRAPH_FILE acyclically with at most max degree + 7 colors."""
    settings = settings_for("color", inputs=(graph_file,), output=out, trace_path=trace_path, fallback_radius=fallback_radius, strict=strict)
    graph, _ = read_graph(graph_file)
    colorizer = Colorizer(graph, fallback_radius=settings.fallback_radius, strict=settings.strict)
    try:
        coloring = colorizer.run()
    finally:
        if settings.trace_path:
            write_trace(settings.trace_path, colorizer.state.trace)

    if settings.output:
        write_coloring(settings.output, coloring)
        formatter.display_info(f"Wrote {len(coloring)} edge colors to {settings.output}")
    else:
        formatter.console.print(formatter.create_coloring_table(coloring, limit=None if settings.verbosity else 50))
    formatter.display_coloring_summary(
        graph,
        coloring,
        colorizer.palette_size,
        steps=len(colorizer.state.trace),
        fallback_incidents=colorizer.state.fallback_incidents,
    )
    if colorizer.state.fallback_incidents:
        formatter.display_warning(
            f"{colorizer.state.fallback_incidents} extension steps needed the fallback search "
            f"(trace positions {colorizer.state.trace.fallback_steps})"
        )
    return EXIT_OK


@cli.command()
@click.argument("graph_file", type=GRAPH_FILE)
@click.argument("coloring_file", type=GRAPH_FILE)
@click.option("--k", "palette", type=click.IntRange(min=1), help="Palette size (default: max degree + 7)")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write the rejection witness as DOT")
def verify(graph_file: str, coloring_file: str, palette: Optional[int], dot_path: Optional[str]):
    """Check that COLORING_FILE is an acyclic coloring of GRAPH_FILE."""
    settings = settings_for("verify", inputs=(graph_file, coloring_file), palette=palette, dot_path=dot_path)
    graph, _ = read_graph(graph_file)
    k = settings.palette_size(graph.max_degree)
    coloring = read_coloring(coloring_file, graph, palette_size=k)
    verdict = verify_acyclic(graph, coloring, k)
    formatter.display_verdict(verdict)
    if settings.dot_path and not verdict.accepted:
        vertices: Sequence[int] = ()
        edges: Sequence = ()
        if verdict.cycle is not None:
            vertices, edges = verdict.cycle.vertices, verdict.cycle.edges
        elif verdict.violation is not None:
            violation = verdict.violation
            vertices, edges = (violation.vertex,), (violation.first, violation.second)
        write_dot(settings.dot_path, witness_dot(graph, vertices, edges, coloring=coloring, title=verdict.reason or "witness"))
    return EXIT_OK if verdict.accepted else EXIT_REJECTED


@cli.command("find-config")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write the witness as DOT")
@click.option("--table", "as_table", is_flag=True, help="Show the witness as a table instead of JSON")
def find_config(graph_file: str, dot_path: Optional[str], as_table: bool):
    """Print the first reducible configuration of GRAPH_FILE as JSON, or none."""
    settings = settings_for("find-config", inputs=(graph_file,), dot_path=dot_path)
    graph, _ = read_graph(graph_file)
    cfg = find_configuration(graph)
    if cfg is not None:
        check_configuration(graph, cfg)
    if as_table:
        formatter.display_configuration(cfg)
    elif cfg is None:
        click.echo("none")
    else:
        click.echo(json.dumps(cfg.to_dict(), sort_keys=True))
    if cfg is not None and settings.dot_path:
        vertices = sorted(
            {x for key, value in cfg.witness.items() if key != "disjunct" for x in _witness_vertices(value)}
        )
        write_dot(settings.dot_path, witness_dot(graph, vertices, [cfg.removal_edge], title=cfg.kind.value))
    return EXIT_OK


def _witness_vertices(value) -> List[int]:
    if isinstance(value, bool):
        return []
    if isinstance(value, int):
        return [value]
    if isinstance(value, dict):
        return list(value.keys()) + list(value.values())
    if isinstance(value, (list, tuple)):
        return list(value)
    return []


@cli.command("discharge")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("--out", "-o", type=click.Path(dir_okay=False), help="Write the JSON report here instead of stdout")
def discharge_command(graph_file: str, out: Optional[str]):
    """Run the discharging rules on GRAPH_FILE (which needs a rotations block)."""
    graph, embedding = read_graph(graph_file)
    if embedding is None:
        raise click.UsageError(f"{graph_file} has no rotations block; discharging needs an embedding")
    report = discharge(graph, embedding)
    data = report.to_dict()
    data["manual_review"] = needs_manual_review(graph, report)
    if out:
        write_json(out, data)
        formatter.display_discharge(report)
        formatter.display_info(f"Wrote report to {out}")
    else:
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    if data["manual_review"]:
        errors.display_warning("no configuration and no negative weight: flag for manual review")
    return EXIT_OK


@cli.command()
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("--k-max", type=click.IntRange(min=0), default=ORACLE_K_MAX, show_default=True, help="Largest palette to try")
def oracle(graph_file: str, k_max: int):
    """Print the exact acyclic chromatic index of a small graph."""
    settings = settings_for("oracle", inputs=(graph_file,), k_max=k_max)
    graph, _ = read_graph(graph_file)
    index = exact_acyclic_index(graph, settings.k_max)
    click.echo(f"exceeds {settings.k_max}" if index is None else str(index))
    return EXIT_OK


@cli.command()
@click.argument("family")
@click.argument("params", nargs=-1)
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed")
@click.option("--out", "-o", type=click.Path(dir_okay=False), required=True, help="Graph file to write")
def gen(family: str, params: Sequence[str], seed: int, out: str):
    """Generate a planar graph: FAMILY [PARAMS...].

    Families: wheel K, grid R C, cycle N, complete N, prism K, icosahedron,
    stacked_triangulation N, subdivided BASE [BASE PARAMS...] E.
    """
    generated = get_generator(family).generate(tuple(params), seed=seed)
    write_graph(out, generated.graph, generated.embedding)
    formatter.display_info(
        f"Wrote {generated.spec.name}: n={generated.graph.n}, m={generated.graph.m}, "
        f"max degree {generated.graph.max_degree} to {out}"
    )
    return EXIT_OK


@cli.command("corpus-run")
@click.option("--seeds", help="Comma-separated seeds for the randomized families (default 1,2,3,4,5)")
@click.option("--jobs", "-j", type=click.IntRange(min=1), help="Worker processes (default from ACYCLIC_JOBS, else 1)")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=REPORT_NAME, show_default=True, help="JSON lines report")
@click.option("--fallback-radius", type=click.IntRange(min=0), default=FALLBACK_RADIUS, show_default=True)
@click.option("--oracle-edges", type=click.IntRange(min=0), default=CORPUS_ORACLE_EDGES, show_default=True, help="Run the oracle on instances up to this many edges")
@click.option("--family", "families", multiple=True, help="Only run these families (can specify multiple)")
@click.option("--list-families", is_flag=True, help="List available families and exit")
def corpus_run(
    seeds: Optional[str],
    jobs: Optional[int],
    report_path: str,
    fallback_radius: int,
    oracle_edges: int,
    families: Sequence[str],
    list_families: bool,
):
    """Color and verify every instance of the generated corpus."""
    if list_families:
        console.print("\n[bold]Available Families:[/bold]\n")
        for name in GENERATORS:
            aliases = [k for k, v in FAMILY_ALIASES.items() if v == name]
            console.print(f"  • {name}")
            if aliases:
                console.print(f"    [dim]Aliases: {', '.join(aliases)}[/dim]")
        console.print()
        return EXIT_OK

    settings = settings_for(
        "corpus-run",
        seeds=parse_seeds(seeds),
        jobs=jobs,
        report_path=report_path,
        fallback_radius=fallback_radius,
        oracle_edges=oracle_edges,
    )
    specs = default_corpus(settings.seeds)
    if families:
        wanted = {get_generator(name).family for name in families}
        specs = [s for s in specs if s.family in wanted]

    runner = CorpusRunner(specs, jobs=settings.jobs, fallback_radius=settings.fallback_radius, oracle_edges=settings.oracle_edges)
    results = runner.run()
    write_jsonl(settings.report_path, runner.report_lines(results))

    totals = runner.totals(results)
    formatter.display_corpus_summary(runner.summary(results), totals, runner.histogram(results))
    for result in results:
        if result.error:
            formatter.display_warning(f"{result.name}: {result.error}")
    if totals.get("configurations_missing"):
        formatter.display_warning(f"{totals['configurations_missing']} 2-connected instances had no configuration")
    formatter.display_info(f"Wrote report to {settings.report_path}")
    return EXIT_OK if totals["failed"] == 0 else EXIT_REJECTED


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="acyclic", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        errors.display_error("aborted")
        return EXIT_USAGE
    except click.ClickException as exc:
        errors.display_error(exc.format_message())
        return EXIT_USAGE
    except NoConfigurationError as exc:
        errors.display_error(str(exc))
        return EXIT_NO_CONFIGURATION
    except (ExtensionFailedError, PaletteTooSmallError) as exc:
        errors.display_error(str(exc))
        return EXIT_EXTENSION_FAILED
    except ImproperColoringError as exc:
        errors.display_error(str(exc))
        return EXIT_REJECTED
    except AcyclicToolkitError as exc:
        errors.display_error(str(exc))
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
