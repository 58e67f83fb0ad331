import pytest
from hypothesis import given

from sgcanon.colgraph import Colour, is_isomorphism
from sgcanon.enumeration import (
    AnnotatedEdge,
    Done,
    Step,
    annotated_edge_compare,
    bfs_enumerate,
    compare_converted,
    lazy_bfs_enumerate,
)
from sgcanon.errors import DisconnectedError, EnumeratorExhausted, ValidationError
from sgcanon.oracle import orbits_bruteforce
from sgcanon.perm import compose, invert

from strategies import A, B, coloured_graphs, cycle3, graph, loop, path3

LOOP_A = Colour.of_protein("A")


def two_edges():
    return graph(3, (1, 2, A), (1, 3, B))


def collect(lazy):
    steps = []
    while True:
        out = lazy.step()
        if isinstance(out, Done):
            return steps, out.graph
        steps.append((out.edge, out.source, out.target))
        lazy = out.next


def test_single_loop():
    e = bfs_enumerate(loop(), 1)
    assert e.order == ((1, 1, LOOP_A),)
    assert e.renaming == (1,)


def test_in_edge_then_out_edges():
    e = bfs_enumerate(two_edges(), 2)
    assert e.order == ((1, 2, A), (1, 3, B))
    assert e.renaming == (2, 1, 3)


def test_out_edges_before_in_edges():
    g = graph(3, (2, 1, A), (1, 3, B))
    # from 1: the out-edge (1,3) comes before the lower-coloured in-edge (2,1)
    assert bfs_enumerate(g, 1).order == ((1, 3, B), (2, 1, A))


def test_cycle_starts_all_convert_equally():
    g = cycle3()
    converted = {tuple(bfs_enumerate(g, v).converted(g)) for v in (1, 2, 3)}
    assert len(converted) == 1


def test_lazy_loop():
    steps, final = collect(lazy_bfs_enumerate(loop(), 1))
    assert steps == [((1, 1, LOOP_A), 1, 1)]
    assert final == loop()


def test_lazy_two_edges():
    steps, final = collect(lazy_bfs_enumerate(two_edges(), 2))
    assert [(s, t) for _, s, t in steps] == [(2, 1), (2, 3)]
    assert final == graph(3, (2, 1, A), (2, 3, B))


def test_lazy_position_steps_once():
    lazy = lazy_bfs_enumerate(loop(), 1)
    first = lazy.step()
    assert isinstance(first, Step)
    with pytest.raises(EnumeratorExhausted):
        lazy.step()
    assert isinstance(first.next.step(), Done)


def test_annotated_edge_order():
    c = Colour.of_protein("c")
    assert annotated_edge_compare(AnnotatedEdge(1, 2, c), AnnotatedEdge(1, 3, c)) == -1
    assert annotated_edge_compare(AnnotatedEdge(1, 2, A), AnnotatedEdge(1, 2, B)) == -1
    x = AnnotatedEdge(2, 1, A)
    assert annotated_edge_compare(x, x) == 0


def test_compare_converted_on_path():
    g = path3()
    from_1, from_3 = bfs_enumerate(g, 1), bfs_enumerate(g, 3)
    assert from_1.converted(g)[0] == AnnotatedEdge(1, 2, A)
    assert from_3.converted(g)[0] == AnnotatedEdge(2, 1, A)
    assert compare_converted(g, from_1, from_3) == -1
    assert compare_converted(g, from_3, from_1) == 1
    assert compare_converted(g, from_1, from_1) == 0


def test_compare_rejects_foreign_enumeration():
    with pytest.raises(ValidationError):
        compare_converted(path3(), bfs_enumerate(cycle3(), 1), bfs_enumerate(path3(), 1))


def test_errors():
    with pytest.raises(DisconnectedError):
        bfs_enumerate(graph(3, (1, 2, A)), 1)
    with pytest.raises(ValidationError):
        bfs_enumerate(path3(), 4)
    with pytest.raises(ValidationError):
        lazy_bfs_enumerate(path3(), 0)


@given(coloured_graphs())
def test_enumeration_invariants(g):
    for v in range(1, g.n + 1):
        e = bfs_enumerate(g, v)
        assert sorted(e.order, key=lambda t: (t[0], t[1], t[2].sort_key)) == list(g.edges)
        assert sorted(e.renaming) == list(range(1, g.n + 1))
        assert e.renaming[v - 1] == 1
        assert e.edge_visits <= 2 * len(g.edges)
        assert bfs_enumerate(g, v) == e
        steps, final = collect(lazy_bfs_enumerate(g, v))
        assert [s[0] for s in steps] == list(e.order)
        assert [(s, t) for _, s, t in steps] == [(x.source, x.target) for x in e.converted(g)]
        assert is_isomorphism(g, final, e.renaming)


@given(coloured_graphs(max_n=7))
def test_orbit_mates_enumerate_alike(g):
    for orbit in orbits_bruteforce(g).orbits:
        members = sorted(orbit)
        first = bfs_enumerate(g, members[0])
        for w in members[1:]:
            other = bfs_enumerate(g, w)
            assert first.converted(g) == other.converted(g)


@given(coloured_graphs(max_n=7))
def test_equal_conversions_give_automorphisms(g):
    enums = [bfs_enumerate(g, v) for v in range(1, g.n + 1)]
    for x in enums:
        for y in enums:
            if x.converted(g) == y.converted(g):
                assert is_isomorphism(g, g, compose(invert(y.renaming), x.renaming))
