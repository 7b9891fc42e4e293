"""Benchmark harness: a seeded random operation mix with timing and descent totals.

Each step draws 50% ``search``, 30% ``insert`` and 20% ``delete``; a
delete with nothing stored turns into a search.  Timing wraps the single
structure call with ``time.perf_counter_ns``.
"""

from __future__ import annotations

import logging
import random
import time
from fractions import Fraction

from approx_veb.errors import DomainError
from approx_veb.reports import BenchRow
from approx_veb.structures import ApproxVeb, Name, Variant
from approx_veb.word import WordConfig

logger = logging.getLogger(__name__)

MAX_UNIVERSE_BITS = 64
OPS = ("search", "insert", "delete")


def build_structure(
    structure: Variant,
    universe_bits: int,
    *,
    epsilon: Fraction | str = "1",
    delta_bits: int | None = None,
    word: WordConfig | None = None,
) -> ApproxVeb:
    """Instantiate the structure under test over ``[0, 2 ** universe_bits - 1]``.

    Raises:
        DomainError: If ``universe_bits`` is outside ``[1, 64]``.
    """
    if not 1 <= universe_bits <= MAX_UNIVERSE_BITS:
        raise DomainError(
            f"universe bits must lie in [1, {MAX_UNIVERSE_BITS}], got {universe_bits}"
        )
    top = (1 << universe_bits) - 1
    match structure:
        case Variant.MULTIPLICATIVE:
            return ApproxVeb.multiplicative(epsilon, top, word)
        case Variant.ADDITIVE:
            step = universe_bits // 2 if delta_bits is None else delta_bits
            return ApproxVeb.additive(1 << step, top, word)
        case _:
            return ApproxVeb.exact(top, word)


def run_bench(
    structure: Variant,
    universe_bits: int,
    ops: int,
    seed: int = 0,
    *,
    epsilon: Fraction | str = "1",
    delta_bits: int | None = None,
    word: WordConfig | None = None,
) -> list[BenchRow]:
    """Run ``ops`` random operations and return one row per operation kind.

    ``ops = 0`` returns no rows.
    """
    veb = build_structure(
        structure, universe_bits, epsilon=epsilon, delta_bits=delta_bits, word=word
    )
    if ops <= 0:
        return []
    low = 1 if structure is Variant.MULTIPLICATIVE else 0
    top = (1 << universe_bits) - 1
    rng = random.Random(seed)
    live: list[Name] = []
    counts = dict.fromkeys(OPS, 0)
    elapsed = dict.fromkeys(OPS, 0)
    descents = dict.fromkeys(OPS, 0)

    for _ in range(ops):
        draw = rng.random()
        op = "search" if draw < 0.5 else "insert" if draw < 0.8 else "delete"
        if op == "delete" and not live:
            op = "search"
        if op == "delete":
            i = rng.randrange(len(live))
            live[i], live[-1] = live[-1], live[i]
            name = live.pop()
            start = time.perf_counter_ns()
            veb.delete(name)
        else:
            x = rng.randint(low, top)
            start = time.perf_counter_ns()
            if op == "insert":
                live.append(veb.insert(x))
            else:
                veb.search(x)
        elapsed[op] += time.perf_counter_ns() - start
        counts[op] += 1
        descents[op] += veb.stats.last_descents

    logger.info(
        "bench %s/%d: %d ops, %d stored, max descents %d",
        structure,
        universe_bits,
        ops,
        len(veb),
        veb.stats.max_descents,
    )
    return [
        BenchRow(
            structure=structure,
            universe_bits=universe_bits,
            op=op,
            count=counts[op],
            total_ns=elapsed[op],
            descents=descents[op],
        )
        for op in OPS
    ]
