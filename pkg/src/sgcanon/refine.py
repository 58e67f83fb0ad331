"""Partition refinement over the automaton view of a coloured graph.

The automaton has two states per vertex: the vertex itself (final) and a
private sink ``⊥_v`` (non-final).  Its alphabet is every colour of the graph
plus a reversed twin of each colour.  An edge ``(u, v)`` coloured ``c``
gives ``δ(u, c) = v`` and ``δ(v, c⁻) = u``; a vertex without a
``x``-transition moves to its own sink, and sinks absorb every symbol.

States are written as integers: ``v`` for vertex ``v`` and ``-v`` for its
sink ``⊥_v``.

Two refinements compute the coarsest stable partition (vertex
bisimulation).  :func:`hopcroft_original` keeps its worklist as an unordered
set.  :func:`hopcroft_extended` keeps it as an ordered list driven by the
colour order, and additionally tracks a distinguished class ``M`` that is
carried along by every automorphism.  :func:`bisim_fixpoint` is a naive
signature-refinement oracle for both.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .colgraph import AnyColour, ColouredGraph, ReversedColour, check_graph, check_rigidity
from .errors import ValidationError

State = int


@dataclass(frozen=True)
class Partition:
    """Disjoint classes covering every state; ``least`` is set by the extended refinement."""

    classes: tuple[frozenset[State], ...]
    least: frozenset[int] | None = None

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[State]], least: Iterable[int] | None = None) -> Partition:
        frozen = [frozenset(c) for c in classes]
        frozen.sort(key=lambda c: (min(c) < 0, len(c), min(abs(s) for s in c)))
        return cls(tuple(frozen), None if least is None else frozenset(least))

    @property
    def real_classes(self) -> list[frozenset[int]]:
        return [c for c in self.classes if min(c) > 0]

    @property
    def sink_classes(self) -> list[frozenset[int]]:
        return [c for c in self.classes if max(c) < 0]

    def as_set(self) -> frozenset[frozenset[State]]:
        return frozenset(self.classes)

    def class_of(self, state: State) -> frozenset[State]:
        for c in self.classes:
            if state in c:
                return c
        raise KeyError(state)


class DfaView:
    """Total, reversible transition structure of a rigid coloured graph."""

    def __init__(self, graph: ColouredGraph) -> None:
        violations = check_rigidity(graph) if graph._problem is not None else []
        if violations:
            raise ValidationError("; ".join(v.message for v in violations), violations)
        self.graph = graph
        self.n = graph.n
        plain = list(graph.colours)
        self.symbols: tuple[AnyColour, ...] = tuple(plain) + tuple(ReversedColour(c) for c in plain)
        self.symbol_index = {x: i for i, x in enumerate(self.symbols)}
        k = len(plain)
        # forward[i]: vertex -> vertex on symbol i (only defined transitions between real states)
        self.forward: list[dict[int, int]] = [{} for _ in self.symbols]
        self.backward: list[dict[int, int]] = [{} for _ in self.symbols]
        for u, v, colour in graph.edges:
            i = graph.colour_rank[colour]
            self.forward[i][u] = v
            self.backward[i][v] = u
            self.forward[k + i][v] = u
            self.backward[k + i][u] = v

    @cached_property
    def states(self) -> tuple[State, ...]:
        return tuple(range(1, self.n + 1)) + tuple(-v for v in range(1, self.n + 1))

    def _symbol(self, x: AnyColour) -> int:
        try:
            return self.symbol_index[x]
        except KeyError:
            raise ValidationError(f"symbol {x} is not in the alphabet") from None

    def _step(self, state: State, i: int) -> State:
        if state < 0:
            return state
        return self.forward[i].get(state, -state)

    def preimage(self, state: State, i: int) -> list[State]:
        """All states whose transition on symbol ``i`` lands in ``state``."""
        if state > 0:
            source = self.backward[i].get(state)
            return [] if source is None else [source]
        v = -state
        if v in self.forward[i]:
            return [state]
        return [state, v]


def delta(view: DfaView, state: State, symbol: AnyColour) -> State:
    if state == 0 or abs(state) > view.n:
        raise ValidationError(f"unknown state {state}")
    return view._step(state, view._symbol(symbol))


def delta_hat(view: DfaView, state: State, word: Sequence[AnyColour]) -> State:
    for symbol in word:
        state = delta(view, state, symbol)
    return state


class _Refinery:
    """Array-backed refinable partition over the states of a :class:`DfaView`.

    Classes are addressed by stable integer handles.  When a class splits,
    the part whose transitions hit the splitter keeps the old handle and the
    rest receives a fresh one.
    """

    def __init__(self, view: DfaView) -> None:
        n = view.n
        self.view = view
        self.n = n
        # internal index: vertex v -> v - 1, sink -v -> n + v - 1
        self.elems = list(range(2 * n))
        self.loc = list(range(2 * n))
        self.block = [0] * n + [1] * n
        self.start = [0, n]
        self.end = [n, 2 * n]
        self.handle_of = [0, 1]
        self.block_of = {0: 0, 1: 1}
        self.next_handle = 2
        self.splits = 0
        # preimages[x][i]: internal indices whose x-transition lands on index i
        self.preimages = []
        for forward, backward in zip(view.forward, view.backward):
            table: list[list[int]] = [[] for _ in range(2 * n)]
            for v, u in backward.items():
                table[v - 1].append(u - 1)
            for i in range(n, 2 * n):
                table[i].append(i)
                if i - n + 1 not in forward:
                    table[i].append(i - n)
            self.preimages.append(table)

    def _state(self, index: int) -> State:
        return index + 1 if index < self.n else -(index - self.n + 1)

    def _index(self, state: State) -> int:
        return state - 1 if state > 0 else self.n - state - 1

    def size(self, handle: int) -> int:
        b = self.block_of[handle]
        return self.end[b] - self.start[b]

    def members(self, handle: int) -> list[State]:
        b = self.block_of[handle]
        return [self._state(i) for i in self.elems[self.start[b]:self.end[b]]]

    def split(self, handle: int, symbol: int) -> list[tuple[int, int]]:
        """Split every class by its transitions on ``symbol`` into class ``handle``.

        Returns ``(hit handle, rest handle)`` per split class, ordered by the
        handle the class had before splitting.
        """
        b = self.block_of[handle]
        pre = self.preimages[symbol]
        block = self.block
        hits: dict[int, list[int]] = {}
        for q in self.elems[self.start[b]:self.end[b]]:
            for index in pre[q]:
                blk = block[index]
                if blk in hits:
                    hits[blk].append(index)
                else:
                    hits[blk] = [index]
        refined = []
        for blk, indices in hits.items():
            if len(indices) < self.end[blk] - self.start[blk]:
                refined.append((self.handle_of[blk], blk, indices))
        refined.sort()
        result = []
        for old_handle, blk, indices in refined:
            e = self.end[blk]
            new_block = len(self.start)
            for index in indices:
                e -= 1
                j = self.loc[index]
                other = self.elems[e]
                self.elems[e], self.elems[j] = index, other
                self.loc[index], self.loc[other] = e, j
                self.block[index] = new_block
            self.start.append(e)
            self.end.append(self.end[blk])
            self.end[blk] = e
            rest_handle = self.next_handle
            self.next_handle += 1
            self.handle_of.append(old_handle)
            self.block_of[old_handle] = new_block
            self.handle_of[blk] = rest_handle
            self.block_of[rest_handle] = blk
            self.splits += 1
            result.append((old_handle, rest_handle))
        return result

    def partition(self, least: int | None = None) -> Partition:
        classes = [self.members(h) for h in self.block_of]
        return Partition.from_classes(classes, None if least is None else self.members(least))


class _OrderedWorklist:
    """Doubly linked list of ``(handle, symbol)`` refiners with O(1) membership."""

    HEAD = ("head",)

    def __init__(self) -> None:
        self.nxt: dict = {self.HEAD: self.HEAD}
        self.prv: dict = {self.HEAD: self.HEAD}

    def __contains__(self, item) -> bool:
        return item in self.nxt

    def __bool__(self) -> bool:
        return self.nxt[self.HEAD] != self.HEAD

    def insert_after(self, anchor, item) -> None:
        following = self.nxt[anchor]
        self.nxt[anchor] = item
        self.prv[item] = anchor
        self.nxt[item] = following
        self.prv[following] = item

    def push_front(self, item) -> None:
        self.insert_after(self.HEAD, item)

    def pop_front(self):
        item = self.nxt[self.HEAD]
        following = self.nxt.pop(item)
        del self.prv[item]
        self.nxt[self.HEAD] = following
        self.prv[following] = self.HEAD
        return item

    def __iter__(self):
        item = self.nxt[self.HEAD]
        while item != self.HEAD:
            yield item
            item = self.nxt[item]


def hopcroft_original(graph: ColouredGraph) -> Partition:
    """Hopcroft refinement with an unordered worklist; no distinguished class."""
    check_graph(graph)
    view = DfaView(graph)
    refinery = _Refinery(view)
    symbols = range(len(view.symbols))
    pending: dict[tuple[int, int], None] = dict.fromkeys((1, x) for x in symbols)
    while pending:
        splitter, x = pending.popitem()[0]
        for hit, rest in refinery.split(splitter, x):
            # AddBetter: on a tie the rest part is added
            smaller = hit if refinery.size(hit) < refinery.size(rest) else rest
            for y in symbols:
                if (hit, y) in pending:
                    pending[(rest, y)] = None
                else:
                    pending[(smaller, y)] = None
    return refinery.partition()


def hopcroft_extended(graph: ColouredGraph, stats: dict | None = None) -> tuple[Partition, frozenset[int]]:
    """Deterministic Hopcroft refinement returning the partition and the least class ``M``.

    The worklist is seeded with ``(sinks, x)`` for each symbol in increasing
    order, each pushed to the front.  Classes split by a refiner are handled
    in handle order; for each symbol ``y`` in increasing order an existing
    ``(P, y)`` is followed by the new part, otherwise the smaller part is
    pushed to the front (the hit part on a tie).  ``M`` starts as the set of
    vertices and follows the hit part whenever it splits, which the handle
    scheme gives for free.
    """
    check_graph(graph)
    view = DfaView(graph)
    refinery = _Refinery(view)
    symbols = range(len(view.symbols))
    least = 0
    worklist = _OrderedWorklist()
    for x in symbols:
        worklist.push_front((1, x))
    rounds = 0
    push_front, insert_after, pop_front = worklist.push_front, worklist.insert_after, worklist.pop_front
    present = worklist.nxt
    size = refinery.size
    while present[worklist.HEAD] is not worklist.HEAD:
        splitter, x = pop_front()
        rounds += 1
        for hit, rest in refinery.split(splitter, x):
            smaller = hit if size(hit) <= size(rest) else rest
            for y in symbols:
                if (hit, y) in present:
                    insert_after((hit, y), (rest, y))
                else:
                    push_front((smaller, y))
    partition = refinery.partition(least)
    assert partition.least is not None and min(partition.least) > 0
    if stats is not None:
        stats.update(rounds=rounds, splits=refinery.splits, classes=len(partition.real_classes))
    return partition, partition.least


def bisim_fixpoint(graph: ColouredGraph) -> Partition:
    """Naive oracle: refine by successor-class signatures until nothing changes."""
    view = DfaView(graph)
    states = view.states
    symbols = range(len(view.symbols))
    label = {s: 0 if s > 0 else 1 for s in states}
    count = len(set(label.values()))
    while True:
        signatures = {
            s: (label[s],) + tuple(label[view._step(s, x)] for x in symbols) for s in states
        }
        numbering = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        label = {s: numbering[signatures[s]] for s in states}
        if len(numbering) == count:
            break
        count = len(numbering)
    classes: dict[int, list[State]] = {}
    for s in states:
        classes.setdefault(label[s], []).append(s)
    return Partition.from_classes(classes.values())
