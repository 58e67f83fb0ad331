import hashlib
import json
import random
import threading
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgcanon.colgraph import ColouredGraph, apply_renaming, is_isomorphism
from sgcanon.enumeration import _sequence, bfs_enumerate
from sgcanon.errors import Cancelled, DisconnectedError, ValidationError
from sgcanon.generators import cycle, fig4a, palette, tree
from sgcanon.labelling import (
    LABELLERS,
    canon_combined,
    canon_pairwise,
    canon_parallel,
    canon_race,
    canonical_form,
)
from sgcanon.perm import identity, random_permutation
from sgcanon.refine import hopcroft_extended

from strategies import A, coloured_graphs, cycle3, graph, lifts, loop

DATA = Path(__file__).parent / "data"
NAMES = sorted(LABELLERS)


def minimisers(g):
    seqs = {v: _sequence(g, v)[0] for v in range(1, g.n + 1)}
    best = min(seqs.values())
    return {v for v, s in seqs.items() if s == best}


@pytest.mark.parametrize("name", NAMES)
def test_single_loop_is_canonical(name):
    form = canonical_form(loop(), name)
    assert form.graph == loop()
    assert form.witness == (1,)


def test_digest_is_sha256_of_compact_json():
    form = canon_pairwise(cycle3())
    assert form.bytes == form.graph.dumps().encode("utf-8")
    assert form.digest == hashlib.sha256(form.bytes).hexdigest()
    assert json.loads(form.bytes)["n"] == 3


def test_cycle3_pairwise():
    g = cycle3()
    form = canon_pairwise(g)
    assert form.graph == apply_renaming(g, bfs_enumerate(g, 1).renaming)
    assert form.stats.outer_iterations <= 2


def test_cycle3_parallel_keeps_everyone():
    form = canon_parallel(cycle3())
    assert form.stats.survivors == [3, 3, 3, 3]
    assert form.graph == canon_pairwise(cycle3()).graph


def test_fig4a_permutation_invariance():
    g = fig4a()
    expected = canon_pairwise(g).graph
    rng = random.Random(7)
    for _ in range(100):
        assert canon_pairwise(apply_renaming(g, random_permutation(4, rng))).graph == expected


def test_fig4a_combined_uses_every_vertex():
    form = canon_combined(fig4a())
    assert form.stats.class_size == 4
    assert form.graph == canon_pairwise(fig4a()).graph


def test_tree_with_distinct_colours_has_singleton_least_class():
    # a path whose edges all have different colours
    pal = palette(5)
    g = ColouredGraph.build(6, [(i, i + 1, pal[i - 1]) for i in range(1, 6)])
    _, least = hopcroft_extended(g)
    assert len(least) == 1
    form = canon_combined(g)
    assert form.stats.class_size == 1
    (v,) = least
    assert form.graph == apply_renaming(g, bfs_enumerate(g, v).renaming)


def test_race_repeatable_and_matches_pairwise():
    g = tree(30, seed=3)
    digests = {canon_race(g).digest for _ in range(10)}
    assert digests == {canon_pairwise(g).digest}


def test_pruning_counterexample_fixture():
    # Z2 x Z2 acts freely here; dropping a lone pending vertex whose partner
    # was itself only pruned would lose every minimiser
    g = ColouredGraph.loads((DATA / "pruning_z2z2.json").read_text())
    assert canon_pairwise(g).graph == canon_pairwise(g, prune=False).graph
    best = min(_sequence(g, v)[0] for v in range(1, g.n + 1))
    assert _sequence(g, canon_pairwise(g).witness.index(1) + 1)[0] == best


def test_pruning_saves_work_on_cycles():
    for n in (8, 16, 32):
        assert canon_pairwise(cycle(n)).stats.outer_iterations < canon_pairwise(cycle(n), prune=False).stats.outer_iterations


def test_errors():
    with pytest.raises(DisconnectedError):
        canon_pairwise(graph(3, (1, 2, A)))
    with pytest.raises(ValidationError):
        canon_pairwise(cycle3(), starts=[])
    with pytest.raises(ValidationError):
        canon_parallel(cycle3(), starts=[4])
    with pytest.raises(ValueError):
        canonical_form(cycle3(), "quantum")
    with pytest.raises(ValueError):
        canon_combined(cycle3(), inner="bogus")


def test_cancellation():
    stop = threading.Event()
    stop.set()
    with pytest.raises(Cancelled):
        canon_pairwise(cycle(8), cancel=stop)
    with pytest.raises(Cancelled):
        canon_parallel(cycle(8), cancel=stop)


@settings(max_examples=60)
@given(coloured_graphs(), st.sampled_from(NAMES), st.integers(0, 2**32))
def test_labeller_laws(g, name, seed):
    form = canonical_form(g, name)
    assert is_isomorphism(g, form.graph, form.witness)
    assert canonical_form(form.graph, name).graph == form.graph
    moved = apply_renaming(g, random_permutation(g.n, random.Random(seed)))
    assert canonical_form(moved, name).graph == form.graph


@given(coloured_graphs())
def test_least_rule_parallel_and_race_match_pairwise(g):
    expected = canon_pairwise(g).graph
    assert canon_parallel(g, rule="least").graph == expected
    assert canon_race(g).graph == expected


@given(st.one_of(coloured_graphs(), lifts()))
def test_pruning_never_changes_result(g):
    assert canon_pairwise(g).graph == canon_pairwise(g, prune=False).graph


@given(coloured_graphs(max_n=7), st.data())
def test_start_restriction_with_a_minimiser(g, data):
    best = minimisers(g)
    chosen = data.draw(st.sampled_from(sorted(best)))
    others = data.draw(st.sets(st.integers(1, g.n)))
    assert canon_pairwise(g, others | {chosen}).graph == canon_pairwise(g).graph


@given(coloured_graphs())
def test_starts_default_to_all_vertices(g):
    assert canon_pairwise(g, range(1, g.n + 1)) == canon_pairwise(g)
    assert canon_parallel(g, identity(g.n)) == canon_parallel(g)
