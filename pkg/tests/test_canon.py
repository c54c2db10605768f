import pytest
from hypothesis import given

from konig.canon import (
    brute_force_classes,
    canonical_form,
    canonical_labeling,
    enumerate_class,
    enumerate_graphs,
    is_isomorphic,
)
from konig.errors import SizeError
from konig.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from strategies import graph_and_perm, graphs

# numbers of graphs and of connected graphs up to isomorphism, n = 1..7
ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 7))
def test_counts(n):
    assert len(list(enumerate_graphs(n))) == ALL_COUNTS[n - 1]
    assert len(list(enumerate_graphs(n, connected_only=True))) == CONNECTED_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_brute_force(n):
    forms = [canonical_form(g) for g in enumerate_graphs(n)]
    assert len(set(forms)) == len(forms)
    assert set(forms) == brute_force_classes(n)


def test_enumeration_order_is_stable():
    first = [canonical_form(g) for g in enumerate_graphs(5)]
    again = [canonical_form(g) for g in enumerate_graphs(5)]
    assert first == again
    edges = [len(g.edges) for g in enumerate_graphs(5)]
    assert edges == sorted(edges)


@given(graph_and_perm(max_n=9))
def test_canonical_form_is_label_invariant(gp):
    g, perm = gp
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@given(graphs(max_n=8))
def test_canonical_labeling_is_a_permutation(g):
    perm = canonical_labeling(g)
    assert sorted(perm) == list(g.vertices)


def test_non_isomorphic_pairs():
    assert not is_isomorphic(path_graph(4), star_graph(3))
    assert not is_isomorphic(cycle_graph(6), Graph.from_edges(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]))
    assert is_isomorphic(cycle_graph(5), cycle_graph(5).complement())


def test_size_caps():
    with pytest.raises(SizeError):
        canonical_form(complete_graph(11))
    with pytest.raises(SizeError):
        list(enumerate_graphs(8))


def test_hereditary_class_filter():
    def triangle_free(g):
        return all(not (g.adj[i - 1] & g.adj[j - 1]) for i, j in g.edges)

    # triangle-free graphs on 1..6 vertices
    assert [len(enumerate_class(n, triangle_free)) for n in range(1, 7)] == [1, 2, 3, 7, 14, 38]
