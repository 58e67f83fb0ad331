"""Test corpora: small site graphs up to isomorphism and seeded random coloured graphs.

:func:`site_graph_classes` lists one representative per isomorphism class of
connected site graphs over the given protein and site alphabets.  Classes are
told apart by brute force over all vertex permutations, so nothing here
depends on the labellers under test.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Sequence

from .colgraph import ColouredGraph, apply_renaming
from .generators import random_coloured
from .perm import random_permutation
from .sitegraph import Bond, SiteGraph, apply_site_permutation


def _matchings(slots: Sequence[tuple[int, str]]) -> Iterator[list[Bond]]:
    """Every partial matching of ``slots``; slots on the same vertex may pair up."""
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    yield from _matchings(rest)
    for i, partner in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def _connected(n: int, bonds: list[Bond]) -> bool:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, _), (v, _) in bonds:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(1, n + 1)}) == 1


def _moved(bonds: Sequence[Bond], perm: Sequence[int]) -> tuple[Bond, ...]:
    out = []
    for (u, s), (v, t) in bonds:
        a, b = (perm[u - 1], s), (perm[v - 1], t)
        out.append((a, b) if a <= b else (b, a))
    return tuple(sorted(out))


def _renamed(names: Sequence[str], perm: Sequence[int]) -> tuple[str, ...]:
    out = [""] * len(names)
    for v, image in enumerate(perm):
        out[image - 1] = names[v]
    return tuple(out)


def site_graph_classes(max_n: int = 4, proteins: Sequence[str] = ("A", "B"),
                       sites: Sequence[str] = ("a", "b", "c")) -> list[SiteGraph]:
    """One representative per isomorphism class, ordered by size, bonds, then names.

    Bond shapes are deduplicated by sweeping out each new shape's whole
    orbit under vertex permutations.  Namings of a shape are then reduced by
    the shape's stabiliser, which is exactly the set of permutations that
    can still identify two namings.
    """
    found: list[SiteGraph] = []
    for n in range(1, max_n + 1):
        perms = list(itertools.permutations(range(1, n + 1)))
        slots = [(v, s) for v in range(1, n + 1) for s in sites]
        seen: set[tuple[Bond, ...]] = set()
        shapes: list[tuple[Bond, ...]] = []
        for bonds in _matchings(slots):
            shape = tuple(sorted(bonds))
            if shape in seen or not _connected(n, bonds):
                continue
            orbit = {_moved(shape, p) for p in perms}
            seen |= orbit
            shapes.append(min(orbit))
        for shape in sorted(shapes):
            stabiliser = [p for p in perms if _moved(shape, p) == shape]
            namings = {min(_renamed(names, p) for p in stabiliser)
                       for names in itertools.product(proteins, repeat=n)}
            found.extend(SiteGraph(names, shape) for names in sorted(namings))
    return found


def shuffled(graph: SiteGraph | ColouredGraph, rng: random.Random) -> SiteGraph | ColouredGraph:
    """A uniformly random vertex renaming of ``graph``."""
    perm = random_permutation(graph.n, rng)
    if isinstance(graph, SiteGraph):
        return apply_site_permutation(graph, perm)
    return apply_renaming(graph, perm)


def random_coloured_corpus(count: int = 1000, max_n: int = 8, seed: int = 0) -> list[ColouredGraph]:
    """Seeded random connected rigid coloured graphs with ``1 <= n <= max_n``."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        colours = rng.randint(1, 3)
        graphs.append(random_coloured(n, rng.randrange(2**31), colours, extra=rng.random(), loops=rng.random()))
    return graphs
