"""Site graphs: protein-named vertices joined by site-labelled bonds.

A site graph has vertices ``1..n``, a protein name per vertex and a set of
undirected bonds ``{(v, s), (v', s')}``.  A ``(vertex, site)`` pair may occur
in at most one bond, which is the rigidity the rest of the package exploits.

Names are arbitrary non-empty strings ordered by code point (identical to
byte-wise UTF-8 order).
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from .errors import DisconnectedError, SizeMismatchError, ValidationError
from .perm import Permutation, as_permutation

Site = tuple[int, str]
Bond = tuple[Site, Site]


def _normalise_bond(bond: Iterable[Sequence[Any]]) -> Bond:
    first, second = (tuple(end) for end in bond)
    a = (int(first[0]), str(first[1]))
    b = (int(second[0]), str(second[1]))
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    bonds: tuple[Bond, ...] = ()


@dataclass(frozen=True)
class SiteGraph:
    """An immutable site graph.

    ``names[v - 1]`` is the protein name of vertex ``v``.  ``bonds`` holds
    each bond once, smaller endpoint first, sorted lexicographically; build
    instances with :meth:`build` to get that normal form.
    """

    names: tuple[str, ...]
    bonds: tuple[Bond, ...] = ()

    @classmethod
    def build(cls, names: Iterable[str], bonds: Iterable[Iterable[Sequence[Any]]] = ()) -> SiteGraph:
        normal = sorted({_normalise_bond(b) for b in bonds})
        return cls(tuple(str(name) for name in names), tuple(normal))

    @property
    def n(self) -> int:
        return len(self.names)

    def name(self, v: int) -> str:
        return self.names[v - 1]

    def neighbours(self) -> dict[int, set[int]]:
        adjacent: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for (u, _), (v, _) in self.bonds:
            if u in adjacent and v in adjacent:
                adjacent[u].add(v)
                adjacent[v].add(u)
        return adjacent

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adjacent = self.neighbours()
        seen = {1}
        stack = [1]
        while stack:
            for w in adjacent[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # -- serialisation -------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {
            "agents": [{"id": v, "name": name} for v, name in enumerate(self.names, start=1)],
            "bonds": [[[u, s], [v, t]] for (u, s), (v, t) in self.bonds],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> SiteGraph:
        """Parse the ``{"agents": [...], "bonds": [...]}`` document.

        Agent ids must be exactly ``1..n``.  Raises :class:`ValidationError`
        naming the offending element.
        """
        try:
            agents = doc["agents"]
            raw_bonds = doc.get("bonds", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError(f"site graph document lacks {exc}") from None
        by_id: dict[int, str] = {}
        for index, agent in enumerate(agents):
            try:
                ident, name = int(agent["id"]), agent["name"]
            except (KeyError, TypeError, ValueError):
                raise ValidationError(f"agents[{index}] must have an integer id and a name") from None
            if not isinstance(name, str) or not name:
                raise ValidationError(f"agents[{index}] has an empty or non-string name")
            if ident in by_id:
                raise ValidationError(f"agents[{index}] repeats id {ident}")
            by_id[ident] = name
        if set(by_id) != set(range(1, len(by_id) + 1)):
            raise ValidationError(f"agent ids must be contiguous from 1, got {sorted(by_id)}")
        bonds = []
        for index, bond in enumerate(raw_bonds):
            try:
                (u, s), (v, t) = bond
                bonds.append(((int(u), s), (int(v), t)))
            except (TypeError, ValueError):
                raise ValidationError(f"bonds[{index}] must be [[vertex, site], [vertex, site]]") from None
            if not (isinstance(s, str) and s and isinstance(t, str) and t):
                raise ValidationError(f"bonds[{index}] has an empty or non-string site name")
        graph = cls.build((by_id[v] for v in range(1, len(by_id) + 1)), bonds)
        if len(graph.bonds) != len(bonds):
            raise ValidationError("bond list contains duplicates")
        return graph

    @classmethod
    def loads(cls, text: str) -> SiteGraph:
        return cls.from_json(json.loads(text))


def validate(graph: SiteGraph) -> list[Violation]:
    """Return every invariant violation of ``graph``; empty iff it is a site graph."""
    violations: list[Violation] = []
    for v, name in enumerate(graph.names, start=1):
        if not name:
            violations.append(Violation("empty-name", f"vertex {v} has an empty protein name"))
    owner: dict[Site, Bond] = {}
    for bond in graph.bonds:
        a, b = bond
        for vertex, site in bond:
            if not 1 <= vertex <= graph.n:
                violations.append(
                    Violation("vertex-range", f"bond endpoint {vertex} outside 1..{graph.n}", (bond,))
                )
            if not site:
                violations.append(Violation("empty-site", f"bond at vertex {vertex} has an empty site", (bond,)))
        if a == b:
            violations.append(Violation("loop", f"bond joins site {a} to itself", (bond,)))
            continue
        for end in bond:
            if end in owner:
                violations.append(
                    Violation("site-reuse", f"site {end} used by more than one bond", (owner[end], bond))
                )
            else:
                owner[end] = bond
    return violations


def check(graph: SiteGraph, *, connected: bool = False) -> None:
    """Raise :class:`ValidationError` unless ``graph`` is valid (and connected if asked)."""
    violations = validate(graph)
    if violations:
        raise ValidationError("; ".join(v.message for v in violations), violations)
    if connected and not graph.is_connected():
        raise DisconnectedError("site graph is not connected")


def is_site_isomorphism(
    graph: SiteGraph, other: SiteGraph, mapping: Mapping[int, int] | Sequence[int]
) -> bool:
    """True iff ``mapping`` preserves protein names and site-labelled bonds both ways."""
    if graph.n != other.n:
        raise SizeMismatchError(f"vertex counts differ: {graph.n} vs {other.n}")
    perm = as_permutation(mapping, graph.n)
    if any(graph.names[v] != other.names[perm[v] - 1] for v in range(graph.n)):
        return False
    # a bijection maps bonds injectively, so equal-sized images mean both directions hold
    return set(_map_bonds(graph.bonds, perm)) == set(other.bonds)


def _map_bonds(bonds: Iterable[Bond], perm: Permutation) -> list[Bond]:
    return [_normalise_bond(((perm[u - 1], s), (perm[v - 1], t))) for (u, s), (v, t) in bonds]


def apply_site_permutation(graph: SiteGraph, mapping: Mapping[int, int] | Sequence[int]) -> SiteGraph:
    """Rename vertex ``v`` to ``mapping[v]``, carrying names and bonds along."""
    perm = as_permutation(mapping, graph.n)
    names = [""] * graph.n
    for v, image in enumerate(perm):
        names[image - 1] = graph.names[v]
    return SiteGraph(tuple(names), tuple(sorted(_map_bonds(graph.bonds, perm))))
