import pytest
from hypothesis import given

from konig.cover import (
    all_covering_sets,
    check_criteria,
    find_lf_cover,
    forest_independence,
    is_konig,
    verify_lf_cover,
)
from konig.cutsets import cut_sets, grade
from konig.errors import InputError
from konig.forests import LinearForest, all_max_linear_forests, lf_number, max_linear_forest
from konig.graphs import Graph, complete_graph, cycle_graph, net_graph, path_graph, star_graph
from strategies import graphs

FIRST_EIGHT = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 6), (4, 7), (4, 8)]
SECOND_EIGHT = [(1, 2), (1, 5), (1, 6), (2, 3), (3, 4), (3, 7), (4, 5), (4, 8)]


def _forest(g, edges):
    return LinearForest(g, frozenset(edges))


def test_net_has_no_cover():
    v = is_konig(net_graph())
    assert (v.grade, v.lf, v.konig, v.cover) == (5, 4, False, None)


def test_path_cover_is_the_path():
    g = path_graph(5)
    cover = find_lf_cover(g)
    assert cover.forest.edges == g.edges and cover.s == frozenset()


def test_star_cover():
    g = star_graph(3)
    cover = find_lf_cover(g)
    assert len(cover.forest.edges) == 2 and cover.s == frozenset({1})


def test_first_eight_vertex_example():
    g = Graph.from_edges(8, FIRST_EIGHT)
    forests = all_max_linear_forests(g)
    assert [f.sorted_edges for f in forests] == [[(1, 2), (1, 3), (2, 5), (3, 6), (4, 7), (4, 8)]]
    sets = all_covering_sets(g, forests[0])
    assert [sorted(s) for s in sets] == [[4], [1, 4], [2, 3], [2, 4], [3, 4], [2, 3, 4]]
    assert find_lf_cover(g).s == frozenset({4})


def test_second_eight_vertex_example():
    g = Graph.from_edges(8, SECOND_EIGHT)
    same, rows = forest_independence(g)
    assert same and len(rows) == 3
    for _, sets in rows:
        assert [sorted(s) for s in sets] == [[1, 3], [1, 4], [1, 3, 4]]


def test_criteria_witnesses():
    g = path_graph(4)
    f = _forest(g, g.edges)
    leaf = verify_lf_cover(g, f, {1})
    assert not leaf and leaf.criterion == "1" and leaf.witness == 1
    adjacent = verify_lf_cover(g, f, {2, 3})
    assert not adjacent and adjacent.criterion == "2" and adjacent.witness == (2, 3)
    short = verify_lf_cover(g, _forest(g, [(1, 2), (3, 4)]), ())
    assert not short and short.criterion == "maximal"
    c4 = cycle_graph(4)
    split = verify_lf_cover(c4, _forest(c4, [(1, 2), (2, 3), (3, 4)]), {2})
    assert not split and split.criterion == "3" and split.witness == (1, 4)


def test_isolated_vertex_cannot_be_in_s():
    g = Graph.from_edges(3, [(1, 2)])
    check = check_criteria(g, _forest(g, [(1, 2)]), frozenset({3}))
    assert not check and check.criterion == "1"


def test_s_outside_vertex_range():
    with pytest.raises(InputError):
        verify_lf_cover(path_graph(3), _forest(path_graph(3), path_graph(3).edges), {7})


def test_non_maximum_forest_has_no_covering_sets():
    g = path_graph(4)
    assert all_covering_sets(g, _forest(g, [(1, 2)])) == []


def test_complete_graph_path_covers():
    kn = complete_graph(5)
    assert all_covering_sets(kn, _forest(kn, path_graph(5).edges)) == [frozenset()]


@given(graphs(max_n=7))
def test_found_cover_is_valid_and_konig_matches(g):
    cover = find_lf_cover(g)
    konig = grade(g) == lf_number(g)
    assert (cover is not None) == konig
    if cover is not None:
        assert verify_lf_cover(g, cover.forest, cover.s).ok


@given(graphs(max_n=7))
def test_cover_sets_are_cut_sets_of_the_forest(g):
    f = max_linear_forest(g)
    fsets = set(cut_sets(f.graph).sets)
    for s in all_covering_sets(g, f):
        assert s in fsets


@given(graphs(max_n=7))
def test_cover_gives_height_bound(g):
    # |E(F)| = |S| + n - c_F(S) for an LF-cover, the height of P_S(F)
    cover = find_lf_cover(g)
    if cover is not None:
        h = cut_sets(cover.forest.graph).height_of(cover.s)
        assert len(cover.forest.edges) == h
