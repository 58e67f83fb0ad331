"""Breadth-first edge enumeration from a start vertex.

Starting at ``v`` the enumerator walks the underlying undirected graph in
BFS order.  At each dequeued vertex it looks at the out-edges sorted by
colour, then the in-edges sorted by colour, and records every edge the first
time it is seen.  Vertices are renamed by order of discovery (``v`` becomes
1).  Isomorphic start vertices give identical renamed edge sequences, which
is what the labellers in :mod:`sgcanon.labelling` rely on.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

from .colgraph import Colour, ColouredGraph, Edge, _rename, check_graph
from .errors import EnumeratorExhausted, ValidationError
from .perm import Permutation

# (renamed source, renamed target, colour rank within the graph)
Annotated = tuple[int, int, int]


@dataclass(frozen=True)
class AnnotatedEdge:
    source: int
    target: int
    colour: Colour

    @property
    def key(self) -> tuple:
        return (self.source, self.target, self.colour.sort_key)


def annotated_edge_compare(x: AnnotatedEdge, y: AnnotatedEdge) -> int:
    """Order by renamed endpoint pair, then by colour."""
    kx, ky = x.key, y.key
    return (kx > ky) - (kx < ky)


@dataclass(frozen=True)
class EdgeEnumeration:
    start: int
    order: tuple[Edge, ...]
    renaming: Permutation
    edge_visits: int = 0

    def converted(self, graph: ColouredGraph) -> list[AnnotatedEdge]:
        """The renamed, coloured edge sequence compared by the labellers."""
        alpha = self.renaming
        return [AnnotatedEdge(alpha[u - 1], alpha[v - 1], c) for u, v, c in self.order]


def _check_start(graph: ColouredGraph, start: int) -> None:
    if not 1 <= start <= graph.n:
        raise ValidationError(f"start vertex {start} outside 1..{graph.n}")


def _walk(graph: ColouredGraph, start: int, alpha: list[int], counter: list[int] | None = None
          ) -> Iterator[tuple[Edge, Annotated]]:
    """Yield ``(edge, (α(u), α(v), rank))`` in enumeration order.

    ``alpha`` (indexed by vertex, slot 0 unused) is filled in as vertices are
    discovered; it is complete once the generator is exhausted.
    """
    out, inc = graph.adjacency
    colours = graph.colours
    alpha[start] = 1
    discovered = 1
    queue = deque([start])
    seen: set[tuple[int, int, int]] = set()
    visits = 0
    while queue:
        v = queue.popleft()
        av = alpha[v]
        for rank, w in out[v]:
            visits += 1
            if (v, w, rank) in seen:
                continue
            seen.add((v, w, rank))
            if not alpha[w]:
                discovered += 1
                alpha[w] = discovered
                queue.append(w)
            yield (v, w, colours[rank]), (av, alpha[w], rank)
        for rank, w in inc[v]:
            visits += 1
            if (w, v, rank) in seen:
                continue
            seen.add((w, v, rank))
            if not alpha[w]:
                discovered += 1
                alpha[w] = discovered
                queue.append(w)
            yield (w, v, colours[rank]), (alpha[w], av, rank)
    if counter is not None:
        counter[0] += visits


def _sequence(graph: ColouredGraph, start: int) -> tuple[list[Annotated], list[int]]:
    alpha = [0] * (graph.n + 1)
    seq = [step for _, step in _walk(graph, start, alpha)]
    return seq, alpha


def bfs_enumerate(graph: ColouredGraph, start: int) -> EdgeEnumeration:
    check_graph(graph)
    _check_start(graph, start)
    alpha = [0] * (graph.n + 1)
    counter = [0]
    order = tuple(edge for edge, _ in _walk(graph, start, alpha, counter))
    return EdgeEnumeration(start, order, tuple(alpha[1:]), counter[0])


def compare_converted(graph: ColouredGraph, first: EdgeEnumeration, second: EdgeEnumeration) -> int:
    """Lexicographic comparison of the renamed, coloured edge sequences."""
    edges = graph.edge_set
    for enum in (first, second):
        if len(enum.order) != len(edges) or set(enum.order) != edges or len(enum.renaming) != graph.n:
            raise ValidationError(f"enumeration from {enum.start} is not over this graph")
    kx = [e.key for e in first.converted(graph)]
    ky = [e.key for e in second.converted(graph)]
    return (kx > ky) - (kx < ky)


# -- lazy form ---------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    edge: Edge
    source: int
    target: int
    next: LazyEnumerator


@dataclass(frozen=True)
class Done:
    graph: ColouredGraph


class LazyEnumerator:
    """One position of a lazy BFS enumeration.

    ``step()`` may be called once per instance; it returns the next renamed
    edge together with the enumerator for the following position, or the
    renamed graph once all edges have been produced.
    """

    def __init__(self, graph: ColouredGraph, start: int, _state=None) -> None:
        if _state is None:
            alpha = [0] * (graph.n + 1)
            _state = (_walk(graph, start, alpha), alpha)
        self._graph = graph
        self._start = start
        self._state = _state
        self._used = False

    def step(self) -> Union[Step, Done]:
        if self._used:
            raise EnumeratorExhausted("this enumerator position was already stepped")
        self._used = True
        walker, alpha = self._state
        try:
            edge, (a, b, _) = next(walker)
        except StopIteration:
            return Done(_rename(self._graph, tuple(alpha[1:])))
        return Step(edge, a, b, LazyEnumerator(self._graph, self._start, self._state))


def lazy_bfs_enumerate(graph: ColouredGraph, start: int) -> LazyEnumerator:
    check_graph(graph)
    _check_start(graph, start)
    return LazyEnumerator(graph, start)
