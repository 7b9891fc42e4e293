"""Command-line front end for the approximate vEB library.

Results go to stdout; logs and error messages go to stderr.  Exit codes:
0 on success, 1 for bad input, 2 when a structural self-check fails.
"""

from __future__ import annotations

import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, TypeVar

import click
from pydantic import BaseModel

from approx_veb.apps import (
    OnlineHull,
    StreamOp,
    dijkstra_sssp,
    dump_graph,
    dump_point_stream,
    parse_graph,
    parse_point_stream,
    prim_mst,
    random_connected_graph,
    random_digraph,
    random_point_stream,
)
from approx_veb.bench import run_bench
from approx_veb.config import settings
from approx_veb.errors import InvariantViolation, VebError
from approx_veb.oracles import oracle_mst_weight, oracle_sssp
from approx_veb.reports import (
    OutputFormat,
    hull_report,
    render_bench,
    render_hull,
    render_mst,
    render_sssp,
)
from approx_veb.structures import Variant

logger = logging.getLogger(__name__)

T = TypeVar("T")


class RunConfig(BaseModel):
    """Effective parameters of one command invocation."""

    command: str
    input: Path | None = None
    epsilon: str | None = None
    delta: str | None = None
    seed: int = 0
    exact: bool = False
    check: bool = False
    output_format: OutputFormat = OutputFormat.TEXT

    @property
    def variant(self) -> Variant:
        return Variant.EXACT if self.exact else Variant.MULTIPLICATIVE


class FractionType(click.ParamType):
    """Exact rational parameter: accepts ``0.1``, ``1/16`` or ``2``."""

    name = "fraction"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            parsed = Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a number or fraction", param, ctx)
        if parsed <= 0:
            self.fail(f"{value!r} must be positive", param, ctx)
        return parsed


FRACTION = FractionType()
FORMAT = click.Choice([f.value for f in OutputFormat])


def _run(action: Callable[[], T]) -> T:
    """Run ``action``, mapping library errors to the documented exit codes."""
    try:
        return action()
    except InvariantViolation as exc:
        click.echo(f"Error: invariant violated: {exc}", err=True)
        sys.exit(2)
    except (VebError, OSError) as exc:
        click.echo(f"Error: {exc}", err=True)
        sys.exit(1)


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


@click.group()
@click.option(
    "--log-level",
    default=None,
    help="Logging level for stderr output (default: APPROX_VEB_LOG_LEVEL or WARNING).",
)
def cli(log_level: str | None) -> None:
    """approx-veb: approximate van Emde Boas structures and their applications."""
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--epsilon", type=FRACTION, default=None, help="Multiplicative error (default 1).")
@click.option("--exact", is_flag=True, help="Use the exact queue and compare with the oracle.")
@click.option("--check", is_flag=True, help="Compare an approximate run with the oracle.")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
def mst(
    input_path: Path, epsilon: Fraction | None, exact: bool, check: bool, fmt: str
) -> None:
    """Approximate minimum spanning tree of the graph in INPUT_PATH."""
    config = RunConfig(
        command="mst",
        input=input_path,
        epsilon=str(epsilon or settings.default_epsilon),
        exact=exact,
        check=check,
        output_format=OutputFormat(fmt),
    )

    def action() -> str:
        graph = parse_graph(_read(input_path))
        start = time.perf_counter_ns()
        result = prim_mst(graph, config.variant, config.epsilon)
        elapsed = time.perf_counter_ns() - start
        oracle = oracle_mst_weight(graph) if exact or check else None
        return render_mst(result, config.output_format, elapsed_ns=elapsed, oracle_weight=oracle)

    click.echo(_run(action), nl=False)


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--source", type=int, default=0, show_default=True, help="Source vertex.")
@click.option("--epsilon", type=FRACTION, default=None, help="Multiplicative error in (0, 2].")
@click.option("--exact", is_flag=True, help="Use the exact queue and compare with the oracle.")
@click.option("--check", is_flag=True, help="Compare an approximate run with the oracle.")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
def sssp(
    input_path: Path,
    source: int,
    epsilon: Fraction | None,
    exact: bool,
    check: bool,
    fmt: str,
) -> None:
    """Approximate shortest-path distances in the directed graph in INPUT_PATH."""
    config = RunConfig(
        command="sssp",
        input=input_path,
        epsilon=str(epsilon or settings.default_epsilon),
        exact=exact,
        check=check,
        output_format=OutputFormat(fmt),
    )

    def action() -> str:
        graph = parse_graph(_read(input_path), directed=True)
        start = time.perf_counter_ns()
        result = dijkstra_sssp(graph, source, config.variant, config.epsilon)
        elapsed = time.perf_counter_ns() - start
        oracle = oracle_sssp(graph, source) if exact or check else None
        return render_sssp(result, config.output_format, elapsed_ns=elapsed, oracle_dist=oracle)

    click.echo(_run(action), nl=False)


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--delta", type=float, default=None, help="Angular bucket width in (0, pi/8].")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
def hull(input_path: Path, delta: float | None, fmt: str) -> None:
    """Run the on-line hull over the ``p x y`` / ``q x y`` stream in INPUT_PATH."""
    config = RunConfig(
        command="hull",
        input=input_path,
        delta=str(delta if delta is not None else settings.default_hull_delta),
        output_format=OutputFormat(fmt),
    )

    def action() -> str:
        entries = parse_point_stream(_read(input_path))
        online = OnlineHull(float(config.delta))
        answers = []
        start = time.perf_counter_ns()
        for op, point in entries:
            if op is StreamOp.POINT:
                online.add_point(point)
            elif online.initialized:
                answers.append((point, online.query_contains(point)))
            else:
                answers.append((point, None))
        elapsed = time.perf_counter_ns() - start
        if online.initialized:
            online.check_invariants()
        vertices = online.hull_vertices() if online.initialized else []
        report = hull_report(
            online.delta, online.initialized, vertices, answers, online.stats, elapsed
        )
        return render_hull(report, config.output_format)

    click.echo(_run(action), nl=False)


@cli.command()
@click.option(
    "--structure",
    type=click.Choice([v.value for v in Variant]),
    default="exact",
    show_default=True,
)
@click.option("--universe-bits", type=int, default=32, show_default=True)
@click.option("--ops", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, default=None, help="Random seed (default: APPROX_VEB_BENCH_SEED).")
@click.option("--epsilon", type=FRACTION, default=None, help="Error of the mult structure.")
@click.option("--delta-bits", type=int, default=None, help="log2 of the add structure's delta.")
def bench(
    structure: str,
    universe_bits: int,
    ops: int,
    seed: int | None,
    epsilon: Fraction | None,
    delta_bits: int | None,
) -> None:
    """Time a random 50/30/20 search/insert/delete mix and print CSV rows."""
    config = RunConfig(
        command="bench",
        epsilon=str(epsilon or settings.default_epsilon),
        seed=settings.bench_seed if seed is None else seed,
        output_format=OutputFormat.CSV,
    )

    def action() -> str:
        rows = run_bench(
            Variant(structure),
            universe_bits,
            ops,
            config.seed,
            epsilon=config.epsilon,
            delta_bits=delta_bits,
        )
        return render_bench(rows)

    click.echo(_run(action), nl=False)


@cli.command("gen-graph")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Vertex count.")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Edge count.")
@click.option("--max-weight", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--directed", is_flag=True, help="Random digraph instead of a connected graph.")
def gen_graph(n: int, m: int, max_weight: int, seed: int, directed: bool) -> None:
    """Write a seeded random graph in the edge-list format to stdout."""
    make = random_digraph if directed else random_connected_graph
    graph = _run(lambda: make(n, m, max_weight, seed))
    click.echo(dump_graph(graph), nl=False)


@cli.command("gen-points")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Point count.")
@click.option("--radius", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--queries", type=click.IntRange(min=0), default=0, show_default=True)
def gen_points(n: int, radius: int, seed: int, queries: int) -> None:
    """Write a seeded random ``p``/``q`` point stream to stdout."""
    entries = random_point_stream(n, radius, seed, queries)
    click.echo(dump_point_stream(entries), nl=False)


if __name__ == "__main__":
    cli()
