"""Timing harness for the labellers across three graph families.

``symmetric``
    single-colour directed cycles, where every vertex is a valid start and
    automorphism pruning does the heavy lifting;
``asymmetric``
    random rigid coloured graphs with three colours;
``trees``
    random rigid coloured trees, which have no non-trivial automorphisms.

Sizes are powers of two from 4 up to ``max_n``.  Each ``(graph, algorithm)``
cell is timed ``repeats`` times (at least 5) and the median is reported;
the counters come from one run and are exact because the labellers are
deterministic.

JSON schema (``BenchReport.to_json``)::

    {"suite": str, "repeats": int,
     "rows": [{"generator": str, "n": int, "algorithm": str,
               "wall_time": float,            # seconds, median
               "outer_iterations": int,
               "survivor_trace_length": int,  # rounds recorded by the lockstep labeller, else 0
               "class_count": int}]}          # real-vertex refinement classes of the input
"""

from __future__ import annotations

import statistics
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field

from .colgraph import ColouredGraph
from .generators import cycle, random_coloured, tree
from .labelling import canon_combined, canon_pairwise, canon_parallel
from .refine import hopcroft_extended

MIN_REPEATS = 5

SUITES: dict[str, Callable[[int], ColouredGraph]] = {
    "symmetric": lambda n: cycle(n),
    "asymmetric": lambda n: random_coloured(n, seed=n, colours=3),
    "trees": lambda n: tree(n, seed=n),
}

ALGORITHMS = {
    "pairwise": canon_pairwise,
    "parallel": canon_parallel,
    "refined": canon_combined,
}


@dataclass(frozen=True)
class BenchRow:
    generator: str
    n: int
    algorithm: str
    wall_time: float
    outer_iterations: int
    survivor_trace_length: int
    class_count: int


@dataclass
class BenchReport:
    suite: str
    repeats: int
    rows: list[BenchRow] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"suite": self.suite, "repeats": self.repeats, "rows": [asdict(r) for r in self.rows]}


def sizes(max_n: int) -> list[int]:
    out, n = [], 4
    while n <= max_n:
        out.append(n)
        n *= 2
    return out


def run_suite(suite: str, max_n: int, repeats: int = MIN_REPEATS,
              algorithms: tuple[str, ...] = tuple(ALGORITHMS)) -> BenchReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if repeats < MIN_REPEATS:
        raise ValueError(f"need at least {MIN_REPEATS} repeats for a median")
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown algorithm {unknown[0]!r}; choose from {', '.join(ALGORITHMS)}")
    report = BenchReport(suite, repeats)
    for n in sizes(max_n):
        graph = SUITES[suite](n)
        classes = len(hopcroft_extended(graph)[0].real_classes)
        for name in algorithms:
            labeller = ALGORITHMS[name]
            times = []
            for _ in range(repeats):
                began = time.perf_counter()
                form = labeller(graph)
                times.append(time.perf_counter() - began)
            report.rows.append(BenchRow(
                generator=suite,
                n=n,
                algorithm=name,
                wall_time=statistics.median(times),
                outer_iterations=form.stats.outer_iterations,
                survivor_trace_length=len(form.stats.survivors),
                class_count=classes,
            ))
    return report
