import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgcanon.errors import DisconnectedError, PermutationError, SizeMismatchError, ValidationError
from sgcanon.generators import fig1
from sgcanon.perm import as_permutation, compose, identity, invert
from sgcanon.sitegraph import SiteGraph, apply_site_permutation, check, is_site_isomorphism, validate

from strategies import site_graphs


def test_single_vertex_is_valid():
    assert validate(SiteGraph.build(["A"])) == []


def test_fig1_is_valid():
    assert validate(fig1()) == []


def test_reused_site_reported_with_both_bonds():
    g = SiteGraph.build(["A", "B", "C"], [((1, "x"), (2, "x")), ((1, "x"), (3, "y"))])
    found = validate(g)
    assert [v.kind for v in found] == ["site-reuse"]
    assert set(found[0].bonds) == set(g.bonds)


def test_same_site_loop_rejected_but_two_sites_allowed():
    assert [v.kind for v in validate(SiteGraph.build(["A"], [((1, "x"), (1, "x"))]))] == ["loop"]
    assert validate(SiteGraph.build(["A"], [((1, "x"), (1, "y"))])) == []


def test_out_of_range_and_empty_names():
    kinds = {v.kind for v in validate(SiteGraph(("", "B"), (((1, "x"), (3, "y")),)))}
    assert kinds == {"empty-name", "vertex-range"}


def test_check_connected():
    g = SiteGraph.build(["A", "B"])
    check(g)
    with pytest.raises(DisconnectedError):
        check(g, connected=True)


def test_identity_is_isomorphism():
    assert is_site_isomorphism(fig1(), fig1(), identity(3))


def test_fig1_end_swap_is_not_isomorphism():
    assert not is_site_isomorphism(fig1(), fig1(), {1: 3, 2: 2, 3: 1})


def test_symmetric_bond_swap():
    g = SiteGraph.build(["A", "A"], [((1, "x"), (2, "x"))])
    assert is_site_isomorphism(g, g, (2, 1))


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        is_site_isomorphism(fig1(), SiteGraph.build(["A"]), (1,))


def test_apply_fig1_reversal():
    moved = apply_site_permutation(fig1(), {1: 3, 2: 2, 3: 1})
    assert set(moved.bonds) == {((2, "c"), (3, "c")), ((1, "b"), (2, "a")), ((1, "α"), (2, "β"))}
    assert moved.names == ("blue", "red", "blue")


def test_apply_rejects_non_bijection():
    with pytest.raises(PermutationError):
        apply_site_permutation(fig1(), (1, 1, 2))


def test_json_round_trip_and_layout():
    text = fig1().dumps()
    assert json.loads(text)["agents"][0] == {"id": 1, "name": "blue"}
    assert json.loads(text)["bonds"][0] == [[1, "c"], [2, "c"]]
    assert SiteGraph.loads(text) == fig1()


@pytest.mark.parametrize("doc, needle", [
    ({"agents": [{"id": 1, "name": "A"}, {"id": 3, "name": "B"}]}, "contiguous"),
    ({"agents": [{"id": 1, "name": ""}]}, "agents[0]"),
    ({"agents": [{"id": 1, "name": "A"}], "bonds": [[[1, "x"]]]}, "bonds[0]"),
    ({"agents": [{"id": 1, "name": "A"}], "bonds": [[[1, "x"], [1, ""]]]}, "bonds[0]"),
    ({"bonds": []}, "agents"),
])
def test_parser_names_offending_element(doc, needle):
    with pytest.raises(ValidationError, match=needle.replace("[", r"\[")):
        SiteGraph.from_json(doc)


@given(site_graphs(), st.data())
def test_permutation_keeps_validity_and_is_isomorphism(g, data):
    perm = data.draw(st.permutations(range(1, g.n + 1)))
    moved = apply_site_permutation(g, perm)
    assert validate(moved) == []
    assert is_site_isomorphism(g, moved, perm)
    assert is_site_isomorphism(moved, g, invert(as_permutation(perm, g.n)))
    assert apply_site_permutation(moved, invert(tuple(perm))) == g


@given(st.integers(1, 7), st.data())
def test_perm_helpers(n, data):
    p = tuple(data.draw(st.permutations(range(1, n + 1))))
    assert compose(p, invert(p)) == identity(n) == compose(invert(p), p)
