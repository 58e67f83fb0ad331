"""Rigid edge-coloured digraphs and the encoding of site graphs into them.

Edges are ``(u, v, colour)`` triples, so one ordered pair may carry several
edges as long as their colours differ.
Colours come from a single linearly ordered universe: a colour carries an
optional protein name and a set of ``(site, site)`` pairs.  Colours with a
protein come first (ordered by name, then by pair list); pure pair colours
follow, ordered by their sorted pair lists.  :class:`ReversedColour` exists
only for the automaton view used by :mod:`sgcanon.refine` and sorts after
every plain colour.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Union

from .errors import (
    DisconnectedError,
    NotInImageError,
    SizeMismatchError,
    ValidationError,
)
from .perm import Permutation, as_permutation
from .sitegraph import SiteGraph, Violation
from .sitegraph import check as check_site_graph

SitePair = tuple[str, str]
Edge = tuple[int, int, "Colour"]


@dataclass(frozen=True)
class Colour:
    protein: str | None = None
    pairs: tuple[SitePair, ...] = ()

    def __post_init__(self) -> None:
        normal = tuple(sorted(set((str(s), str(t)) for s, t in self.pairs)))
        object.__setattr__(self, "pairs", normal)
        if self.protein is None and not normal:
            raise ValueError("a colour needs a protein name or at least one site pair")
        if self.protein == "":
            raise ValueError("protein name must be non-empty")

    @classmethod
    def of_protein(cls, name: str) -> Colour:
        return cls(protein=name)

    @classmethod
    def of_pairs(cls, pairs: Iterable[Sequence[str]]) -> Colour:
        return cls(pairs=tuple((s, t) for s, t in pairs))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.protein, self.pairs))

    @cached_property
    def sort_key(self) -> tuple:
        if self.protein is not None:
            return (0, 0, self.protein, self.pairs)
        return (0, 1, "", self.pairs)

    def __lt__(self, other: AnyColour) -> bool:
        return self.sort_key < other.sort_key

    def to_json(self) -> dict[str, Any]:
        if self.protein is None:
            return {"kind": "pairs", "pairs": [list(p) for p in self.pairs]}
        doc: dict[str, Any] = {"kind": "protein", "name": self.protein}
        if self.pairs:
            doc["pairs"] = [list(p) for p in self.pairs]
        return doc

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> Colour:
        kind = doc.get("kind")
        try:
            pairs = tuple((s, t) for s, t in doc.get("pairs", ()))
        except (TypeError, ValueError):
            raise ValidationError(f"colour pairs must be [site, site] lists: {doc!r}") from None
        if any(not isinstance(x, str) or not x for pair in pairs for x in pair):
            raise ValidationError(f"colour pairs must hold non-empty strings: {doc!r}")
        try:
            if kind == "protein":
                if not isinstance(doc.get("name"), str):
                    raise ValidationError(f"protein colour needs a string name: {doc!r}")
                return cls(protein=doc["name"], pairs=pairs)
            if kind == "pairs":
                return cls(pairs=pairs)
        except ValueError as exc:
            raise ValidationError(f"bad colour {doc!r}: {exc}") from None
        raise ValidationError(f"unknown colour kind {kind!r}")

    def __str__(self) -> str:
        body = ",".join(f"({s},{t})" for s, t in self.pairs)
        if self.protein is None:
            return "{" + body + "}"
        return "{" + self.protein + ("," + body if body else "") + "}"


@dataclass(frozen=True)
class ReversedColour:
    base: Colour

    @cached_property
    def sort_key(self) -> tuple:
        return (1,) + self.base.sort_key

    def __lt__(self, other: AnyColour) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.base}⁻"


AnyColour = Union[Colour, ReversedColour]


def colour_compare(a: AnyColour, b: AnyColour) -> int:
    """Three-way comparison: -1, 0 or 1."""
    ka, kb = a.sort_key, b.sort_key
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True, eq=False)
class ColouredGraph:
    """A directed graph on ``1..n`` whose edges are ``(u, v, colour)`` triples.

    Construction does not validate; call :func:`check_rigidity` or
    :func:`check_graph`.  Equality is structural.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        normal = tuple(sorted(set(self.edges), key=lambda e: (e[0], e[1], e[2].sort_key)))
        object.__setattr__(self, "edges", normal)

    @classmethod
    def build(cls, n: int, edges: Iterable[Edge]) -> ColouredGraph:
        listed = list(edges)
        graph = cls(n, tuple(listed))
        if len(graph.edges) != len(listed):
            raise ValidationError("an edge is listed twice")
        return graph

    @classmethod
    def from_mapping(cls, n: int, colouring: Mapping[tuple[int, int], Colour]) -> ColouredGraph:
        return cls(n, tuple((u, v, c) for (u, v), c in colouring.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        edges = ", ".join(f"({u},{v}):{c}" for u, v, c in self.edges)
        return f"ColouredGraph(n={self.n}, [{edges}])"

    def __contains__(self, edge: object) -> bool:
        return edge in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def _problem(self) -> tuple | None:
        # graphs are immutable, so validation runs once per instance
        return _diagnose(self)

    def colours_between(self, u: int, v: int) -> list[Colour]:
        return [c for a, b, c in self.edges if (a, b) == (u, v)]

    @cached_property
    def colours(self) -> tuple[Colour, ...]:
        """Distinct colours used by the graph, in increasing order."""
        return tuple(sorted({c for _, _, c in self.edges}, key=lambda c: c.sort_key))

    @cached_property
    def colour_rank(self) -> dict[Colour, int]:
        return {c: i for i, c in enumerate(self.colours)}

    @cached_property
    def adjacency(self) -> tuple[list[list[tuple[int, int]]], list[list[tuple[int, int]]]]:
        """``(out, in)`` where ``out[v]`` lists ``(colour rank, target)`` sorted by colour.

        Indexed by vertex (slot 0 unused).  Self-loops appear in ``out`` only.
        """
        rank = self.colour_rank
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for u, v, colour in self.edges:
            out[u].append((rank[colour], v))
            if u != v:
                inc[v].append((rank[colour], u))
        for lst in out:
            lst.sort()
        for lst in inc:
            lst.sort()
        return out, inc

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adjacent: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v, _ in self.edges:
            if 1 <= u <= self.n and 1 <= v <= self.n:
                adjacent[u].append(v)
                adjacent[v].append(u)
        seen = [False] * (self.n + 1)
        seen[1] = True
        stack = [1]
        count = 1
        while stack:
            for w in adjacent[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    # -- serialisation -------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "edges": [{"from": u, "to": v, "colour": c.to_json()} for u, v, c in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> ColouredGraph:
        try:
            n = doc["n"]
            raw_edges = doc.get("edges", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError(f"coloured graph document lacks {exc}") from None
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"n must be a positive integer, got {n!r}")
        edges = []
        for index, edge in enumerate(raw_edges):
            try:
                u, v, colour = int(edge["from"]), int(edge["to"]), edge["colour"]
            except (KeyError, TypeError, ValueError):
                raise ValidationError(f"edges[{index}] needs integer from/to and a colour") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValidationError(f"edges[{index}] endpoint outside 1..{n}")
            try:
                edges.append((u, v, Colour.from_json(colour)))
            except (ValidationError, AttributeError) as exc:
                raise ValidationError(f"edges[{index}]: {exc}") from None
        try:
            return cls.build(n, edges)
        except ValidationError as exc:
            raise ValidationError(f"edges: {exc}") from None

    @classmethod
    def loads(cls, text: str) -> ColouredGraph:
        return cls.from_json(json.loads(text))


def check_rigidity(graph: ColouredGraph) -> list[Violation]:
    """Every vertex must have pairwise distinct out-colours and distinct in-colours."""
    violations: list[Violation] = []
    seen_out: set[tuple[int, Colour]] = set()
    seen_in: set[tuple[int, Colour]] = set()
    for u, v, colour in graph.edges:
        if (u, colour) in seen_out:
            violations.append(
                Violation("rigidity-out", f"vertex {u} has two outgoing edges coloured {colour}")
            )
        seen_out.add((u, colour))
        if (v, colour) in seen_in:
            violations.append(
                Violation("rigidity-in", f"vertex {v} has two incoming edges coloured {colour}")
            )
        seen_in.add((v, colour))
    return violations


def check_graph(graph: ColouredGraph) -> None:
    """Raise unless ``graph`` is rigid, in range and connected."""
    problem = graph._problem
    if problem is not None:
        kind, message, violations = problem
        raise kind(message, violations) if violations else kind(message)


def _diagnose(graph: ColouredGraph) -> tuple | None:
    if graph.n < 1:
        return ValidationError, "a coloured graph needs at least one vertex", None
    for u, v, _ in graph.edges:
        if not (1 <= u <= graph.n and 1 <= v <= graph.n):
            return ValidationError, f"edge ({u},{v}) has an endpoint outside 1..{graph.n}", None
    violations = check_rigidity(graph)
    if violations:
        return ValidationError, "; ".join(v.message for v in violations), violations
    if not graph.is_connected():
        return DisconnectedError, "coloured graph is not connected", None
    return None


# -- encoding --------------------------------------------------------------------


def encode(site_graph: SiteGraph) -> ColouredGraph:
    """Encode a valid, connected site graph as a rigid coloured graph.

    Every vertex gets a self-loop carrying its protein name (plus any bonds
    between two of its own sites).  Each bonded vertex pair gets one edge,
    directed by the least ordered site pair joining them; if that least pair
    joins equally named sites both directions are emitted.  An edge's colour
    is the set of site pairs read in its direction.
    """
    check_site_graph(site_graph, connected=True)
    between: dict[tuple[int, int], list[SitePair]] = {}
    for (u, s), (v, t) in site_graph.bonds:
        between.setdefault((u, v), []).append((s, t))
        if u != v:
            between.setdefault((v, u), []).append((t, s))
        else:
            between[(u, u)].append((t, s))
    edges: list[Edge] = []
    for v in range(1, site_graph.n + 1):
        edges.append((v, v, Colour(site_graph.name(v), tuple(between.get((v, v), ())))))
    for (u, v), pairs in between.items():
        if u >= v:
            continue
        backwards = between[(v, u)]
        least = min(min(pairs), min(backwards))
        # a least pair (s, s) lies in both lists, giving edges both ways
        if least in pairs:
            edges.append((u, v, Colour.of_pairs(pairs)))
        if least in backwards:
            edges.append((v, u, Colour.of_pairs(backwards)))
    return ColouredGraph(site_graph.n, tuple(edges))


def decode(graph: ColouredGraph) -> SiteGraph:
    """Invert :func:`encode`; raise :class:`NotInImageError` on graphs it cannot produce."""
    names: dict[int, str] = {}
    bonds: set = set()
    for u, v, colour in graph.edges:
        if u == v:
            if colour.protein is None:
                raise NotInImageError(f"self-loop check failed: loop at {v} carries no protein name")
            if u in names:
                raise NotInImageError(f"self-loop check failed: vertex {v} has two self-loops")
            names[u] = colour.protein
        elif colour.protein is not None:
            raise NotInImageError(f"edge-colour check failed: edge ({u},{v}) carries a protein name")
        for s, t in colour.pairs:
            bonds.add(tuple(sorted(((u, s), (v, t)))))
    missing = [v for v in range(1, graph.n + 1) if v not in names]
    if missing:
        raise NotInImageError(f"self-loop check failed: vertex {missing[0]} has no self-loop")
    try:
        site_graph = SiteGraph.build([names[v] for v in range(1, graph.n + 1)], bonds)
        round_trip = encode(site_graph)
    except ValidationError as exc:
        raise NotInImageError(f"site-uniqueness check failed: {exc}") from None
    if round_trip != graph:
        raise NotInImageError(
            "direction check failed: edge directions or colours disagree with the least site pair"
        )
    return site_graph


# -- renaming and isomorphism --------------------------------------------------


def apply_renaming(graph: ColouredGraph, mapping: Mapping[int, int] | Sequence[int]) -> ColouredGraph:
    """Move edge ``(u, v, c)`` to ``(mapping[u], mapping[v], c)``."""
    perm = as_permutation(mapping, graph.n)
    return _rename(graph, perm)


def _rename(graph: ColouredGraph, perm: Permutation) -> ColouredGraph:
    return ColouredGraph(graph.n, tuple((perm[u - 1], perm[v - 1], c) for u, v, c in graph.edges))


def is_isomorphism(
    graph: ColouredGraph, other: ColouredGraph, mapping: Mapping[int, int] | Sequence[int]
) -> bool:
    if graph.n != other.n:
        raise SizeMismatchError(f"vertex counts differ: {graph.n} vs {other.n}")
    return apply_renaming(graph, mapping) == other
