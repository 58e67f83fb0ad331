"""Example and random graphs.

Synthetic coloured graphs take their colours from the protein-name part of
the colour universe (``Colour.of_protein("blue")`` and so on); only the
order of colours matters to the algorithms.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from typing import Any

from .colgraph import Colour, ColouredGraph
from .sitegraph import SiteGraph

BLUE = Colour.of_protein("blue")
RED = Colour.of_protein("red")


def fig1() -> SiteGraph:
    """Three proteins: blue–red joined on (c, c), red–blue joined on (a, b) and (β, α)."""
    return SiteGraph.build(
        ["blue", "red", "blue"],
        [((1, "c"), (2, "c")), ((2, "a"), (3, "b")), ((2, "β"), (3, "α"))],
    )


def fig4a() -> ColouredGraph:
    """Square 1 2 / 3 4: blue cycle 1→2→4→3→1, red both ways along 1–2 and 3–4."""
    edges = [(1, 2, BLUE), (2, 4, BLUE), (4, 3, BLUE), (3, 1, BLUE)]
    edges += [(1, 2, RED), (2, 1, RED), (3, 4, RED), (4, 3, RED)]
    return ColouredGraph.build(4, edges)


# Positions from the drawing (x, y); letters a..p become vertices 1..16.
FIG4B_POSITIONS = {
    "a": (0, 0), "b": (4, -4), "c": (8, 0), "d": (4, 4),
    "e": (4, 1), "f": (4, -1), "g": (6, -1), "h": (6, 1),
    "i": (10, 0), "j": (14, 4), "k": (18, 0), "l": (14, -4),
    "m": (14, 1), "n": (14, -1), "o": (12, -1), "p": (12, 1),
}
FIG4B_BLUE_CYCLES = ["abcd", "efgh", "ijkl", "mnop"]
FIG4B_RED_PAIRS = ["bf", "de", "jm", "ln", "go", "hp", "ak", "ci"]


def fig4b() -> ColouredGraph:
    """16 vertices in four blue directed 4-cycles, tied by eight red two-way pairs."""
    index = {letter: i for i, letter in enumerate(sorted(FIG4B_POSITIONS), start=1)}
    edges = []
    for cycle in FIG4B_BLUE_CYCLES:
        for here, there in zip(cycle, cycle[1:] + cycle[0]):
            edges.append((index[here], index[there], BLUE))
    for x, y in FIG4B_RED_PAIRS:
        edges.append((index[x], index[y], RED))
        edges.append((index[y], index[x], RED))
    return ColouredGraph.build(16, edges)


def fig4b_vertical_reflection() -> tuple[int, ...]:
    """Mirror image across the vertical axis x = 9, as a vertex permutation."""
    index = {letter: i for i, letter in enumerate(sorted(FIG4B_POSITIONS), start=1)}
    by_position = {pos: letter for letter, pos in FIG4B_POSITIONS.items()}
    images = []
    for letter in sorted(FIG4B_POSITIONS):
        x, y = FIG4B_POSITIONS[letter]
        images.append(index[by_position[(18 - x, y)]])
    return tuple(images)


def palette(k: int) -> list[Colour]:
    return [Colour.of_protein(f"c{i}") for i in range(k)]


def cycle(n: int, colours: list[Colour] | None = None) -> ColouredGraph:
    """Directed cycle 1→2→…→n→1; edge ``i`` takes ``colours[(i - 1) % len(colours)]``."""
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    colours = colours or [Colour.of_protein("a")]
    return ColouredGraph(n, tuple((i, i % n + 1, colours[(i - 1) % len(colours)]) for i in range(1, n + 1)))


def _rigid_add(out: list[set], inc: list[set], edges: list, u: int, v: int, c: Colour) -> bool:
    if c in out[u] or c in inc[v]:
        return False
    edges.append((u, v, c))
    out[u].add(c)
    inc[v].add(c)
    return True


def tree(n: int, seed: int = 0, colours: int = 2) -> ColouredGraph:
    """Random rigid coloured tree: vertex ``i`` hangs off a random earlier vertex."""
    if n < 1 or colours < 1:
        raise ValueError("tree needs n >= 1 and at least one colour")
    rng = random.Random(seed)
    pal = palette(colours)
    out: list[set] = [set() for _ in range(n + 1)]
    inc: list[set] = [set() for _ in range(n + 1)]
    edges: list = []
    open_vertices = [1]
    for child in range(2, n + 1):
        while True:
            parent = rng.choice(open_vertices)
            options = [(True, c) for c in pal if c not in out[parent]]
            options += [(False, c) for c in pal if c not in inc[parent]]
            if options:
                break
            open_vertices.remove(parent)
        downward, c = rng.choice(options)
        if downward:
            _rigid_add(out, inc, edges, parent, child, c)
        else:
            _rigid_add(out, inc, edges, child, parent, c)
        open_vertices.append(child)
    return ColouredGraph(n, tuple(edges))


def random_coloured(n: int, seed: int = 0, colours: int = 2, extra: float = 0.3, loops: float = 0.2) -> ColouredGraph:
    """Random connected rigid coloured graph: a random tree plus extra edges and self-loops."""
    base = tree(n, seed, colours)
    rng = random.Random(seed * 7919 + 17)
    pal = palette(colours)
    out: list[set] = [set() for _ in range(n + 1)]
    inc: list[set] = [set() for _ in range(n + 1)]
    edges: list = []
    for u, v, c in base.edges:
        _rigid_add(out, inc, edges, u, v, c)
    for _ in range(int(extra * n * colours) + 1):
        u, v = rng.randint(1, n), rng.randint(1, n)
        _rigid_add(out, inc, edges, u, v, rng.choice(pal))
    for v in range(1, n + 1):
        if rng.random() < loops:
            _rigid_add(out, inc, edges, v, v, rng.choice(pal))
    return ColouredGraph(n, tuple(edges))


def random_site_graph(n: int, proteins: int = 2, sites: int = 3, seed: int = 0, extra: float = 0.3) -> SiteGraph:
    """Random connected site graph; each new vertex bonds to an earlier one on free sites."""
    if n < 1 or proteins < 1 or sites < 1:
        raise ValueError("need n, proteins and sites all >= 1")
    if n > 1 and sites < 2 and n > 2:
        raise ValueError("a connected graph on more than two vertices needs at least two sites")
    rng = random.Random(seed)
    names = [string.ascii_uppercase[i % 26] + ("" if i < 26 else str(i)) for i in range(proteins)]
    site_names = [string.ascii_lowercase[i % 26] + ("" if i < 26 else str(i)) for i in range(sites)]
    free = {v: list(site_names) for v in range(1, n + 1)}
    bonds = []
    for child in range(2, n + 1):
        parents = [p for p in range(1, child) if free[p]]
        if not parents:
            raise ValueError("ran out of free sites while connecting the graph")
        parent = rng.choice(parents)
        s = free[parent].pop(rng.randrange(len(free[parent])))
        t = free[child].pop(rng.randrange(len(free[child])))
        bonds.append(((parent, s), (child, t)))
    for _ in range(int(extra * n)):
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v and len(free[u]) < 2:
            continue
        if not free[u] or not free[v]:
            continue
        s = free[u].pop(rng.randrange(len(free[u])))
        t = free[v].pop(rng.randrange(len(free[v])))
        bonds.append(((u, s), (v, t)))
    return SiteGraph.build([rng.choice(names) for _ in range(n)], bonds)


def chain(n: int) -> SiteGraph:
    """``n`` copies of protein A, each bound from site r to the next one's site l."""
    if n < 1:
        raise ValueError("chain needs n >= 1")
    return SiteGraph.build(["A"] * n, [((i, "r"), (i + 1, "l")) for i in range(1, n)])


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)


_GENERATORS = {
    "fig1": lambda p: fig1(),
    "fig4a": lambda p: fig4a(),
    "fig4b": lambda p: fig4b(),
    "cycle": lambda p: cycle(int(p.get("n", 3)), palette(int(p.get("colours", 1)))),
    "tree": lambda p: tree(int(p.get("n", 8)), int(p.get("seed", 0)), int(p.get("colours", 2))),
    "random": lambda p: random_site_graph(
        int(p.get("n", 6)), int(p.get("proteins", 2)), int(p.get("sites", 3)), int(p.get("seed", 0))
    ),
    "random-coloured": lambda p: random_coloured(
        int(p.get("n", 6)), int(p.get("seed", 0)), int(p.get("colours", 2))
    ),
    "chain": lambda p: chain(int(p.get("n", 3))),
}

KINDS = tuple(_GENERATORS)


def generate(spec: GeneratorSpec) -> SiteGraph | ColouredGraph:
    try:
        make = _GENERATORS[spec.kind]
    except KeyError:
        raise ValueError(f"unknown generator {spec.kind!r}; choose from {', '.join(KINDS)}") from None
    return make(spec.params)
