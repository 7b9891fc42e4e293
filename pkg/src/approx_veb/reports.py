"""Text and CSV rendering of command results.

Text output is meant for people and lists one ``name: value`` pair per
line.  CSV output has a fixed header per command so it parses back with
any CSV reader.
"""

from __future__ import annotations

import csv
import io
from enum import StrEnum
from fractions import Fraction
from typing import Iterable, Sequence

from pydantic import BaseModel

from approx_veb.apps import HullStats, MstResult, Point, SsspResult
from approx_veb.errors import HullNotInitializedError
from approx_veb.structures import QueueSummary, Variant

MST_COLUMNS = ("u", "v", "weight")
SSSP_COLUMNS = ("vertex", "dist", "parent", "oracle_dist", "ratio")
HULL_COLUMNS = ("kind", "x", "y", "answer")
BENCH_COLUMNS = ("structure", "universe_bits", "op", "count", "total_ns", "descents")


class OutputFormat(StrEnum):
    TEXT = "text"
    CSV = "csv"


class HullReport(BaseModel):
    """Final state of an on-line hull run."""

    delta: float
    initialized: bool
    vertices: list[tuple[int, int]]
    answers: list[tuple[tuple[int, int], bool | None]]
    stats: HullStats
    elapsed_ns: int


class BenchRow(BaseModel):
    """Totals for one operation kind of a benchmark run."""

    structure: Variant
    universe_bits: int
    op: str
    count: int
    total_ns: int
    descents: int


def ratio(value: int | None, optimum: int | None) -> float | None:
    """``value / optimum``, 1.0 for a zero optimum, ``None`` when either is missing."""
    if value is None or optimum is None:
        return None
    if optimum == 0:
        return 1.0
    return float(Fraction(value, optimum))


def _csv(columns: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(["" if cell is None else cell for cell in row] for row in rows)
    return buffer.getvalue()


def _queue_lines(queue: QueueSummary) -> list[str]:
    return [
        f"reduced_universe: {queue.reduced_universe}",
        f"queue_ops: inserts={queue.inserts} deletes={queue.deletes} "
        f"extractions={queue.extractions}",
        f"descents: total={queue.total_descents} max={queue.max_descents}",
    ]


def _parameter_lines(variant: Variant, epsilon: str | None, delta: str | None) -> list[str]:
    lines = [f"variant: {variant}"]
    if epsilon is not None:
        lines.append(f"epsilon: {epsilon}")
    if delta is not None:
        lines.append(f"delta: {delta}")
    return lines


def render_mst(
    result: MstResult,
    fmt: OutputFormat,
    *,
    elapsed_ns: int,
    oracle_weight: int | None = None,
) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(MST_COLUMNS, result.edges)
    lines = _parameter_lines(result.variant, result.epsilon, result.delta)
    lines.append(f"total_weight: {result.total_weight}")
    lines.append("edges:")
    lines.extend(f"  {u} {v} {w}" for u, v, w in result.edges)
    lines.append(f"elapsed_ms: {elapsed_ns / 1e6:.3f}")
    lines.extend(_queue_lines(result.queue))
    if oracle_weight is not None:
        lines.append(f"oracle_weight: {oracle_weight}")
        lines.append(f"ratio: {ratio(result.total_weight, oracle_weight)}")
    return "\n".join(lines) + "\n"


def render_sssp(
    result: SsspResult,
    fmt: OutputFormat,
    *,
    elapsed_ns: int,
    oracle_dist: list[int | None] | None = None,
) -> str:
    oracle = oracle_dist or [None] * len(result.dist)
    rows = [
        (v, d, result.parent[v], oracle[v], ratio(d, oracle[v]))
        for v, d in enumerate(result.dist)
    ]
    if fmt is OutputFormat.CSV:
        return _csv(SSSP_COLUMNS, rows)
    lines = _parameter_lines(result.variant, result.epsilon, result.delta)
    lines.append(f"source: {result.source}")
    lines.append("distances:")
    for v, d, _parent, exact, r in rows:
        entry = f"  {v} {'inf' if d is None else d}"
        if oracle_dist is not None:
            entry += f" oracle={'inf' if exact is None else exact}"
            if r is not None:
                entry += f" ratio={r}"
        lines.append(entry)
    lines.append(f"elapsed_ms: {elapsed_ns / 1e6:.3f}")
    lines.extend(_queue_lines(result.queue))
    return "\n".join(lines) + "\n"


def hull_report(
    delta: float,
    initialized: bool,
    vertices: list[Point],
    answers: list[tuple[Point, bool | None]],
    stats: HullStats,
    elapsed_ns: int,
) -> HullReport:
    return HullReport(
        delta=delta,
        initialized=initialized,
        vertices=[(p.x, p.y) for p in vertices],
        answers=[((q.x, q.y), a) for q, a in answers],
        stats=stats,
        elapsed_ns=elapsed_ns,
    )


def _answer(answer: bool | None) -> str:
    if answer is None:
        return str(HullNotInitializedError())
    return "true" if answer else "false"


def render_hull(report: HullReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        rows: list[tuple[object, ...]] = [("vertex", x, y, None) for x, y in report.vertices]
        rows.extend(("query", x, y, _answer(a)) for (x, y), a in report.answers)
        return _csv(HULL_COLUMNS, rows)
    stats = report.stats
    lines = [f"delta: {report.delta}"]
    if report.initialized:
        lines.append(f"vertices: {len(report.vertices)}")
        lines.extend(f"  {x} {y}" for x, y in report.vertices)
    else:
        lines.append("vertices: none (still buffering)")
    lines.append("queries:")
    lines.extend(f"  {x} {y} {_answer(a)}" for (x, y), a in report.answers)
    lines.append(f"updates: {stats.updates}")
    lines.append(f"structural_ops: {stats.structural_ops}")
    lines.append(f"ops_per_update: {stats.ops_per_update:.3f}")
    lines.append(f"retired: {stats.retired}")
    lines.append(f"elapsed_ms: {report.elapsed_ns / 1e6:.3f}")
    return "\n".join(lines) + "\n"


def render_bench(rows: list[BenchRow]) -> str:
    """Benchmark rows are always CSV."""
    return _csv(
        BENCH_COLUMNS,
        ((r.structure.value, r.universe_bits, r.op, r.count, r.total_ns, r.descents) for r in rows),
    )
