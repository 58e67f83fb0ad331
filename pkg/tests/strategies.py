"""Hypothesis strategies and small graph builders shared by the tests."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from sgcanon.colgraph import Colour, ColouredGraph, apply_renaming
from sgcanon.errors import ValidationError
from sgcanon.colgraph import check_graph
from sgcanon.generators import palette, random_coloured, random_site_graph, tree

A, B, C = (Colour.of_protein(x) for x in "abc")


def graph(n: int, *edges) -> ColouredGraph:
    return ColouredGraph.build(n, edges)


def path3() -> ColouredGraph:
    return graph(3, (1, 2, A), (2, 3, A))


def cycle3() -> ColouredGraph:
    return graph(3, (1, 2, A), (2, 3, A), (3, 1, A))


def loop() -> ColouredGraph:
    return graph(1, (1, 1, Colour.of_protein("A")))


seeds = st.integers(min_value=0, max_value=2**31 - 1)


@st.composite
def coloured_graphs(draw, max_n: int = 8, max_colours: int = 3) -> ColouredGraph:
    n = draw(st.integers(1, max_n))
    return random_coloured(
        n, draw(seeds), draw(st.integers(1, max_colours)),
        extra=draw(st.floats(0, 1.5)), loops=draw(st.floats(0, 1)),
    )


@st.composite
def trees(draw, max_n: int = 10) -> ColouredGraph:
    return tree(draw(st.integers(1, max_n)), draw(seeds), draw(st.integers(1, 3)))


@st.composite
def site_graphs(draw, max_n: int = 6):
    n = draw(st.integers(1, max_n))
    return random_site_graph(n, draw(st.integers(1, 3)), draw(st.integers(2, 4)), draw(seeds),
                             extra=draw(st.floats(0, 1)))


@st.composite
def permutations(draw, n: int):
    return tuple(draw(st.permutations(range(1, n + 1))))


_GROUPS = {
    "z2": ([(i,) for i in range(2)], lambda a, b: ((a[0] + b[0]) % 2,)),
    "z2z2": (list(itertools.product(range(2), repeat=2)),
             lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)),
    "z4": ([(i,) for i in range(4)], lambda a, b: ((a[0] + b[0]) % 4,)),
    "s3": (list(itertools.permutations(range(3))), lambda a, b: tuple(a[b[i]] for i in range(3))),
    "z3z3": (list(itertools.product(range(3), repeat=2)),
             lambda a, b: ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3)),
}


def group_lift(seed: int, group: str = "z2z2", base: int = 2, edges: int = 4) -> ColouredGraph | None:
    """A graph on which ``group`` acts freely: a random voltage lift of a small base graph.

    Returns ``None`` when the lift is disconnected.  Vertex ids are shuffled so
    the group action does not line up with the numbering.
    """
    rng = random.Random(seed)
    elements, mul = _GROUPS[group]
    pal = palette(3)
    index = {(b, k): i for i, (b, k) in enumerate(itertools.product(range(base), elements), start=1)}
    triples = set()
    used_out, used_in = set(), set()
    for _ in range(edges):
        b, b2, c, g = rng.randrange(base), rng.randrange(base), rng.choice(pal), rng.choice(elements)
        if (b, c) in used_out or (b2, c) in used_in:
            continue
        used_out.add((b, c))
        used_in.add((b2, c))
        for k in elements:
            triples.add((index[(b, k)], index[(b2, mul(k, g))], c))
    lifted = ColouredGraph(len(index), tuple(triples))
    try:
        check_graph(lifted)
    except ValidationError:
        return None
    order = list(range(1, lifted.n + 1))
    rng.shuffle(order)
    return apply_renaming(lifted, order)


@st.composite
def lifts(draw):
    found = draw(st.builds(group_lift, seeds, st.sampled_from(sorted(_GROUPS)), st.integers(1, 3),
                           st.integers(1, 6)))
    from hypothesis import assume

    assume(found is not None)
    return found
