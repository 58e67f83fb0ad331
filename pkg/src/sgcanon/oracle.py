"""Brute-force ground truth for small graphs.

Two tiers:

* naive: try all ``n!`` vertex permutations (capped by ``SGCANON_ORACLE_LIMIT``,
  default 8);
* pruned: fix the image of vertex 1 and let rigidity force the rest of the
  mapping along coloured edges, so each candidate costs linear time (capped
  at ``PRUNED_LIMIT`` vertices).

Neither tier shares code with the labellers.
"""

from __future__ import annotations

import hashlib
import itertools
import os
from collections.abc import Iterator
from dataclasses import dataclass

from .colgraph import ColouredGraph, apply_renaming
from .errors import OracleLimitError, SizeMismatchError
from .perm import Permutation

DEFAULT_LIMIT = 8
PRUNED_LIMIT = 256


def oracle_limit() -> int:
    raw = os.environ.get("SGCANON_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


def _guard(graph: ColouredGraph, limit: int) -> None:
    if graph.n > limit:
        raise OracleLimitError(f"graph has {graph.n} vertices, oracle limit is {limit}")


def _edge_key(graph: ColouredGraph, perm: Permutation) -> tuple:
    return tuple(sorted((perm[u - 1], perm[v - 1], c.sort_key) for u, v, c in graph.edges))


@dataclass(frozen=True)
class OracleForm:
    graph: ColouredGraph
    witness: Permutation

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.graph.dumps().encode("utf-8")).hexdigest()


def canon_bruteforce(graph: ColouredGraph, limit: int | None = None) -> OracleForm:
    """Least sorted edge list over all ``n!`` renamings."""
    _guard(graph, oracle_limit() if limit is None else limit)
    best_key = None
    best: Permutation = ()
    for perm in itertools.permutations(range(1, graph.n + 1)):
        key = _edge_key(graph, perm)
        if best_key is None or key < best_key:
            best_key, best = key, perm
    return OracleForm(apply_renaming(graph, best), best)


def _incidence(graph: ColouredGraph) -> tuple[dict, dict]:
    out: dict[int, dict] = {}
    inc: dict[int, dict] = {}
    for u, v, c in graph.edges:
        out.setdefault(u, {})[c] = v
        inc.setdefault(v, {})[c] = u
    return out, inc


def _forced_extension(graph: ColouredGraph, other: ColouredGraph, root: int, image: int,
                      tables: tuple) -> Permutation | None:
    """Follow edges out of ``root ↦ image``; rigidity leaves no choice at any step."""
    (out_g, in_g), (out_h, in_h) = tables
    mapping = {root: image}
    used = {image}
    stack = [root]
    while stack:
        u = stack.pop()
        mu = mapping[u]
        for here, there in ((out_g, out_h), (in_g, in_h)):
            mine = here.get(u, {})
            theirs = there.get(mu, {})
            if len(mine) != len(theirs):
                return None
            for colour, w in mine.items():
                target = theirs.get(colour)
                if target is None:
                    return None
                if w in mapping:
                    if mapping[w] != target:
                        return None
                elif target in used:
                    return None
                else:
                    mapping[w] = target
                    used.add(target)
                    stack.append(w)
    if len(mapping) != graph.n:
        return None
    perm = tuple(mapping[v] for v in range(1, graph.n + 1))
    return perm if apply_renaming(graph, perm) == other else None


def iter_isomorphisms(
    graph: ColouredGraph, other: ColouredGraph, method: str = "pruned", limit: int | None = None
) -> Iterator[Permutation]:
    if graph.n != other.n:
        raise SizeMismatchError(f"vertex counts differ: {graph.n} vs {other.n}")
    if method == "naive":
        _guard(graph, oracle_limit() if limit is None else limit)
        for perm in itertools.permutations(range(1, graph.n + 1)):
            if apply_renaming(graph, perm) == other:
                yield perm
    elif method == "pruned":
        _guard(graph, PRUNED_LIMIT if limit is None else limit)
        if len(graph.edges) != len(other.edges):
            return
        tables = (_incidence(graph), _incidence(other))
        for image in range(1, other.n + 1):
            perm = _forced_extension(graph, other, 1, image, tables)
            if perm is not None:
                yield perm
    else:
        raise ValueError(f"unknown method {method!r}")


def iso_bruteforce(
    graph: ColouredGraph, other: ColouredGraph, method: str = "pruned", limit: int | None = None
) -> Permutation | None:
    """Some isomorphism from ``graph`` onto ``other``, or ``None``."""
    return next(iter_isomorphisms(graph, other, method, limit), None)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[frozenset[int], ...]
    group_size: int
    automorphisms: tuple[Permutation, ...]


def orbits_bruteforce(graph: ColouredGraph, method: str = "pruned", limit: int | None = None) -> OrbitPartition:
    autos = tuple(iter_isomorphisms(graph, graph, method, limit))
    orbit_of: dict[int, set[int]] = {}
    for v in range(1, graph.n + 1):
        if v in orbit_of:
            continue
        orbit = {perm[v - 1] for perm in autos}
        for w in orbit:
            orbit_of[w] = orbit
    unique = {frozenset(o) for o in orbit_of.values()}
    orbits = tuple(sorted(unique, key=lambda o: (len(o), min(o))))
    return OrbitPartition(orbits, len(autos), autos)
