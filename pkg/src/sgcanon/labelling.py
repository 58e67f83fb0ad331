"""Canonical labellers for rigid coloured graphs.

Every labeller renames the input by the discovery order of one BFS edge
enumeration; they differ in how that start vertex is chosen.

``canon_pairwise``
    enumerates from each pending start and keeps the least renamed edge
    sequence, pruning starts that a discovered automorphism shows to be
    redundant.
``canon_parallel``
    steps one lazy enumerator per start in lockstep and, each round, keeps
    only those that emitted the chosen edge.
``canon_combined``
    restricts the starts to the distinguished class returned by the
    extended Hopcroft refinement, then runs one of the above.
``canon_race``
    runs two labellers concurrently and returns whichever finishes first.
"""

from __future__ import annotations

import hashlib
import heapq
import threading
from collections import Counter
from collections.abc import Collection
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .colgraph import ColouredGraph, _rename, check_graph
from .enumeration import _sequence, _walk
from .errors import Cancelled, SgcanonError, ValidationError
from .perm import Permutation, compose, invert

Rule = Literal["multiplicity", "least"]


@dataclass
class LabelStats:
    algorithm: str
    outer_iterations: int = 0
    enumerations: int = 0
    survivors: list[int] = field(default_factory=list)
    class_size: int | None = None


@dataclass(frozen=True)
class CanonicalForm:
    """A canonical representative together with the renaming that produced it."""

    graph: ColouredGraph
    witness: Permutation
    stats: LabelStats = field(compare=False, repr=False, default=None)

    @property
    def bytes(self) -> bytes:
        return canonical_bytes(self.graph)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.bytes).hexdigest()


def canonical_bytes(graph: ColouredGraph) -> bytes:
    return graph.dumps().encode("utf-8")


def _starts(graph: ColouredGraph, starts: Collection[int] | None) -> list[int]:
    check_graph(graph)
    if starts is None:
        return list(range(1, graph.n + 1))
    chosen = sorted(set(starts))
    if not chosen:
        raise ValidationError("start set is empty")
    if chosen[0] < 1 or chosen[-1] > graph.n:
        raise ValidationError(f"start vertices must lie in 1..{graph.n}")
    return chosen


def _check_cancel(cancel: threading.Event | None) -> None:
    if cancel is not None and cancel.is_set():
        raise Cancelled("labelling cancelled")


def canon_pairwise(
    graph: ColouredGraph,
    starts: Collection[int] | None = None,
    *,
    prune: bool = True,
    cancel: threading.Event | None = None,
) -> CanonicalForm:
    """Least renamed edge sequence over all start vertices in scope.

    Pending starts are taken smallest id first.  When a start reproduces the
    current minimum, ``π = α_min⁻¹ ∘ α`` is an automorphism and pending starts
    are thinned along it: of a pending pair ``{x, π(x)}`` the smaller is
    dropped; a lone pending ``x`` is dropped only if its partner was already
    enumerated.
    """
    scope = _starts(graph, starts)
    stats = LabelStats("pairwise")
    pending = set(scope)
    heap = list(scope)
    done: set[int] = set()
    best: list | None = None
    best_alpha: list[int] = []
    while pending:
        _check_cancel(cancel)
        v = heapq.heappop(heap)
        if v not in pending:
            continue
        pending.discard(v)
        done.add(v)
        stats.outer_iterations += 1
        stats.enumerations += 1
        seq, alpha = _sequence(graph, v)
        if best is None or seq < best:
            best, best_alpha = seq, alpha
        elif prune and seq == best:
            inverse_min = invert(tuple(best_alpha[1:]))
            auto = compose(inverse_min, tuple(alpha[1:]))
            remaining = set(pending)
            for x, y in enumerate(auto, start=1):
                if x == y:
                    continue
                x_pending, y_pending = x in pending, y in pending
                if x_pending and y_pending:
                    remaining.discard(min(x, y))
                elif x_pending and y in done:
                    remaining.discard(x)
                elif y_pending and x in done:
                    remaining.discard(y)
            pending = remaining
    witness = tuple(best_alpha[1:])
    return CanonicalForm(_rename(graph, witness), witness, stats)


def canon_parallel(
    graph: ColouredGraph,
    starts: Collection[int] | None = None,
    *,
    rule: Rule = "multiplicity",
    cancel: threading.Event | None = None,
) -> CanonicalForm:
    """Lockstep lazy enumeration from every start in scope.

    Each round every surviving enumerator emits one renamed coloured edge.
    With ``rule="multiplicity"`` the kept edge is the least among those
    emitted by the fewest enumerators; with ``rule="least"`` it is simply the
    least edge, which makes the result the same as :func:`canon_pairwise`.
    """
    scope = _starts(graph, starts)
    stats = LabelStats("parallel" if rule == "multiplicity" else "parallel-least")
    alphas = {v: [0] * (graph.n + 1) for v in scope}
    walkers = {v: _walk(graph, v, alphas[v]) for v in scope}
    survivors = scope
    stats.survivors.append(len(survivors))
    for _ in range(len(graph.edges)):
        _check_cancel(cancel)
        stats.outer_iterations += 1
        emitted = {v: next(walkers[v])[1] for v in survivors}
        if len(survivors) > 1:
            counts = Counter(emitted.values())
            if rule == "multiplicity":
                fewest = min(counts.values())
                chosen = min(edge for edge, count in counts.items() if count == fewest)
            else:
                chosen = min(counts)
            survivors = [v for v in survivors if emitted[v] == chosen]
        stats.survivors.append(len(survivors))
    for v in survivors:
        for _ in walkers[v]:
            pass
    witness = tuple(alphas[survivors[0]][1:])
    return CanonicalForm(_rename(graph, witness), witness, stats)


def canon_combined(
    graph: ColouredGraph,
    inner: Literal["pairwise", "parallel"] = "pairwise",
    *,
    cancel: threading.Event | None = None,
) -> CanonicalForm:
    """Refine first, then label starting only from the distinguished class."""
    from .refine import hopcroft_extended

    check_graph(graph)
    _, least = hopcroft_extended(graph)
    if inner == "pairwise":
        form = canon_pairwise(graph, least, cancel=cancel)
    elif inner == "parallel":
        form = canon_parallel(graph, least, cancel=cancel)
    else:
        raise ValueError(f"unknown inner labeller {inner!r}")
    form.stats.algorithm = f"refined-{inner}"
    form.stats.class_size = len(least)
    return form


class RaceError(SgcanonError):
    """Both racers failed; ``errors`` holds the two exceptions."""

    def __init__(self, errors):
        super().__init__("; ".join(f"{type(e).__name__}: {e}" for e in errors))
        self.errors = tuple(errors)


def canon_race(graph: ColouredGraph) -> CanonicalForm:
    """Race :func:`canon_pairwise` against the lockstep labeller.

    The lockstep racer uses the least-edge rule so that both compute the
    same representative; the winner is therefore irrelevant to the output.
    The lockstep racer runs on a worker thread and the pairwise racer in the
    calling thread; whichever finishes first raises the shared cancel flag,
    which the other polls once per outer iteration.
    """
    check_graph(graph)
    cancel = threading.Event()

    def lockstep() -> CanonicalForm:
        form = canon_parallel(graph, rule="least", cancel=cancel)
        cancel.set()
        return form

    future = _race_pool().submit(lockstep)
    try:
        form = canon_pairwise(graph, cancel=cancel)
    except Cancelled:
        form = future.result()
        form.stats.algorithm = "race:parallel"
        return form
    except Exception as exc:
        try:
            form = future.result()
        except Exception as other:
            raise RaceError([exc, other]) from None
        form.stats.algorithm = "race:parallel"
        return form
    cancel.set()
    form.stats.algorithm = "race:pairwise"
    return form


_POOL: ThreadPoolExecutor | None = None
_POOL_LOCK = threading.Lock()


def _race_pool() -> ThreadPoolExecutor:
    # one shared pool: starting threads per call costs more than a small labelling
    global _POOL
    with _POOL_LOCK:
        if _POOL is None:
            _POOL = ThreadPoolExecutor(max_workers=4, thread_name_prefix="sgcanon-race")
        return _POOL


LABELLERS = {
    "pairwise": canon_pairwise,
    "parallel": canon_parallel,
    "refined": canon_combined,
    "refined-pairwise": lambda g: canon_combined(g, "pairwise"),
    "refined-parallel": lambda g: canon_combined(g, "parallel"),
    "race": canon_race,
}


def canonical_form(graph: ColouredGraph, algorithm: str = "pairwise") -> CanonicalForm:
    try:
        labeller = LABELLERS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {sorted(LABELLERS)}") from None
    return labeller(graph)
