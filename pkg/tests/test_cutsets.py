from itertools import combinations

import pytest
from hypothesis import given

from konig.cutsets import cut_sets, grade, is_cut_set, prime_height
from konig.errors import InputError
from konig.graphs import Graph, complete_graph, connected_components, cycle_graph, net_graph, path_graph, star_graph
from strategies import graph_and_perm, graphs


def _cut_sets_by_definition(g):
    out = set()
    for k in range(g.n + 1):
        for s in combinations(g.vertices, k):
            c = len(connected_components(g, s))
            if all(len(connected_components(g, set(s) - {v})) < c for v in s):
                out.add(frozenset(s))
    return out


@given(graphs(max_n=7))
def test_cut_sets_match_definition(g):
    assert set(cut_sets(g).sets) == _cut_sets_by_definition(g)


@given(graph_and_perm(max_n=7))
def test_grade_is_label_invariant(gp):
    g, perm = gp
    assert grade(g) == grade(g.relabel(perm))


@given(graphs(max_n=7))
def test_dim_and_grade(g):
    rep = cut_sets(g)
    assert rep.grade + rep.dim == 2 * g.n
    assert frozenset() in rep.sets
    assert rep.height_of(()) == g.n - len(connected_components(g))
    assert rep.grade == min(prime_height(g, s) for s in rep.sets)


@pytest.mark.parametrize("n", range(2, 9))
def test_path_and_complete(n):
    assert grade(path_graph(n)) == n - 1
    assert grade(complete_graph(n)) == n - 1
    assert cut_sets(complete_graph(n)).sets == (frozenset(),)


def test_small_examples():
    assert set(cut_sets(path_graph(3)).sets) == {frozenset(), frozenset({2})}
    assert set(cut_sets(path_graph(4)).sets) == {frozenset(), frozenset({2}), frozenset({3})}
    c4 = cut_sets(cycle_graph(4))
    assert set(c4.sets) == {frozenset(), frozenset({1, 3}), frozenset({2, 4})}
    assert grade(star_graph(3)) == 2
    assert is_cut_set(star_graph(3), {1})
    assert not is_cut_set(star_graph(3), {2})


def test_net_grade():
    rep = cut_sets(net_graph())
    assert rep.grade == 5
    assert len(rep.sets) == 7


def test_bad_subset():
    with pytest.raises(InputError):
        is_cut_set(path_graph(3), {4})
