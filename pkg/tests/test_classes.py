from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from konig.canon import canonical_form
from konig.classes import (
    ClassSpec,
    build,
    build_tp,
    complete_bipartite_cover,
    constructive_cover,
    cographs,
    hamiltonian_cycle,
    hamiltonian_path,
    has_asteroidal_triple,
    interval_graph,
    interval_graphs,
    is_bipartite,
    is_chordal,
    is_cograph,
    is_cograph_by_decomposition,
    is_complete_bipartite,
    is_interval,
    is_trivially_perfect,
    permutation_graph,
    permutation_graphs,
    recognize,
    trivially_perfect_cover,
    trivially_perfect_expressions,
)
from konig.cover import find_lf_cover, verify_lf_cover
from konig.cutsets import grade
from konig.errors import InputError, SizeError
from konig.forests import lf_number
from konig.graphs import Graph, complete_bipartite_graph, cycle_graph, net_graph, path_graph
from strategies import graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _brute_path(g):
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in permutations(g.vertices))


def _brute_cycle(g):
    if g.n < 3:
        return False
    return any(
        all(g.has_edge(a, b) for a, b in zip(p, p[1:] + p[:1]))
        for p in permutations(g.vertices)
    )


def test_small_class_examples():
    assert is_cograph(cycle_graph(4)) and not is_trivially_perfect(cycle_graph(4))
    assert not is_cograph(path_graph(4))
    assert not is_bipartite(net_graph())
    assert interval_graph([(1, 3), (2, 4), (5, 6)]).edges == frozenset({(1, 2)})
    assert permutation_graph([2, 1]).edges == frozenset({(1, 2)})
    assert permutation_graph([1, 2, 3]).edges == frozenset()
    assert permutation_graph([3, 2, 1]).edges == frozenset({(1, 2), (1, 3), (2, 3)})
    # the net is chordal but has an asteroidal triple (its three leaves)
    assert is_chordal(net_graph()) and has_asteroidal_triple(net_graph()) and not is_interval(net_graph())
    assert not is_chordal(cycle_graph(4))


def test_complete_bipartite_examples():
    even = complete_bipartite_cover(3, 3)
    assert len(even.forest.edges) == 5 and even.s == frozenset()
    odd = complete_bipartite_cover(3, 1)
    assert odd.s == frozenset({4}) and len(odd.forest.edges) == 2


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 6) for b in range(1, a + 1)])
def test_complete_bipartite_cover_is_maximum(a, b):
    cover = constructive_cover(ClassSpec("complete_bipartite", (a, b)))
    assert len(cover.forest.edges) == lf_number(complete_bipartite_graph(a, b))
    swapped = constructive_cover(ClassSpec("complete_bipartite", (b, a)))
    assert len(swapped.forest.edges) == len(cover.forest.edges)


def test_join_of_two_points_is_a_path():
    cover = trivially_perfect_cover(("join", ("union", "K1", "K1")))
    assert cover.forest.host.edges == path_graph(3).relabel([1, 3, 2]).edges
    assert len(cover.forest.edges) == 2 and cover.s == frozenset()


def test_tp_join_of_three_points_uses_s():
    cover = trivially_perfect_cover(("join", ("union", "K1", "K1", "K1")))
    assert cover.s == frozenset({4}) and len(cover.forest.edges) == 2


@pytest.mark.parametrize("bad", ["K2", ("union", "K1"), ("join",), ("meet", "K1"), ()])
def test_bad_tp_expressions(bad):
    with pytest.raises(InputError):
        build_tp(bad)


def test_bad_builder_inputs():
    with pytest.raises(InputError):
        permutation_graph([1, 1, 2])
    with pytest.raises(InputError):
        interval_graph([(3, 1)])
    with pytest.raises(InputError):
        ClassSpec("planar", None)
    with pytest.raises(InputError):
        build(ClassSpec("bipartite", net_graph()))
    with pytest.raises(InputError):
        constructive_cover(ClassSpec("traceable", Graph(3)))


@given(graphs(max_n=6))
def test_hamiltonian_dp_matches_brute_force(g):
    path = hamiltonian_path(g)
    assert (path is not None) == _brute_path(g)
    if path is not None:
        assert sorted(path) == list(g.vertices)
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
    cycle = hamiltonian_cycle(g)
    assert (cycle is not None) == _brute_cycle(g)
    if cycle is not None:
        assert cycle[0] == 1


@given(graphs(max_n=8))
def test_traceable_cover(g):
    if hamiltonian_path(g) is None:
        return
    cover = constructive_cover(ClassSpec("traceable", g))
    assert cover.s == frozenset()
    assert len(cover.forest.edges) == g.n - 1 == grade(g)


@given(graphs(max_n=8))
def test_recognisers_against_networkx(g):
    h = _nx(g)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_chordal(g) == nx.is_chordal(h)


@given(graphs(max_n=8))
def test_cograph_two_ways(g):
    assert is_cograph(g) == is_cograph_by_decomposition(g)


@given(graphs(max_n=6))
def test_trivially_perfect_is_cograph_and_interval(g):
    assert is_trivially_perfect(g) == (is_cograph(g) and is_interval(g))


@given(st.permutations(list(range(1, 7))))
def test_permutation_graphs_are_coverable(word):
    g = permutation_graph(word)
    assert find_lf_cover(g) is not None


@given(st.permutations(list(range(1, 7))))
def test_permutation_graph_complement_is_reverse(word):
    g = permutation_graph(word)
    r = permutation_graph(list(reversed(word)))
    assert g.edges.isdisjoint(r.edges) and len(g.edges) + len(r.edges) == 15


@pytest.mark.parametrize("n", range(1, 9))
def test_tp_constructive_cover(n):
    for e in trivially_perfect_expressions(n):
        cover = constructive_cover(ClassSpec("trivially_perfect", e))
        g = cover.forest.host
        assert is_cograph(g) and is_interval(g)
        assert len(cover.forest.edges) == lf_number(g)


def test_class_counts():
    # OEIS A000669 (cographs), A003227 (permutation), A005975 (interval), A003238 (trivially perfect)
    assert [len(cographs(n)) for n in range(1, 7)] == [1, 2, 4, 10, 24, 66]
    assert [len(trivially_perfect_expressions(n)) for n in range(1, 9)] == [1, 2, 4, 9, 20, 48, 115, 286]
    up_to = lambda gen, m: len({canonical_form(g) for k in range(1, m + 1) for g in gen(k)})
    assert [up_to(permutation_graphs, m) - up_to(permutation_graphs, m - 1) for m in range(1, 6)] == [1, 2, 4, 11, 33]
    assert [up_to(interval_graphs, m) - up_to(interval_graphs, m - 1) for m in range(1, 6)] == [1, 2, 4, 10, 27]


def test_enumeration_caps():
    with pytest.raises(SizeError):
        permutation_graphs(9)
    with pytest.raises(SizeError):
        interval_graphs(8)
    with pytest.raises(SizeError):
        trivially_perfect_expressions(10)


def test_recognize_dispatch():
    assert recognize(complete_bipartite_graph(2, 3), "complete_bipartite")
    assert not recognize(path_graph(4), "complete_bipartite")
    assert recognize(path_graph(5), "tree") and recognize(path_graph(5), "traceable")
    assert not recognize(path_graph(4), "hamiltonian") and recognize(cycle_graph(4), "hamiltonian")
    assert recognize(path_graph(4), "interval") and not recognize(cycle_graph(4), "interval")
    with pytest.raises(InputError):
        recognize(path_graph(3), "planar")


@given(graphs(max_n=7))
def test_complete_bipartite_recogniser(g):
    expected = any(
        g.n >= 2 and canonical_form(g) == canonical_form(complete_bipartite_graph(a, g.n - a))
        for a in range(1, g.n)
    )
    assert is_complete_bipartite(g) == expected
