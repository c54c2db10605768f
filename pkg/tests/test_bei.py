import json

import pytest
from hypothesis import given, settings

from konig.bei import (
    CheckReport,
    bei,
    check_primary_decomposition,
    delta_in_ps_matches_criterion,
    grading_prop_check,
    hamiltonian_relabel,
    path_ideal,
    ps_ideal,
    regseq_suite,
    regular_sequence_check,
    reports_to_json,
    ring_for,
    root_candidate,
    verify_colon_theorem,
    verify_root_ass,
    z_nonzero_check,
    z_value,
    zprop_check,
)
from konig.canon import enumerate_graphs
from konig.cover import find_lf_cover
from konig.cutsets import cut_sets, grade
from konig.errors import InputError
from konig.forests import is_linear_forest, max_linear_forest
from konig.graphs import Graph, complete_graph, cycle_graph, net_graph, path_graph
from konig.groebner import Ideal, height, krull_dimension
from strategies import graphs

SMALL = [g for n in range(2, 5) for g in enumerate_graphs(n)]


def test_ps_ideal_examples():
    ring = ring_for(3, 3)
    assert ps_ideal(path_graph(3), {2}, ring=ring) == Ideal(ring, [ring.x(2), ring.y(2)])
    assert ps_ideal(path_graph(3), (), ring=ring) == bei(complete_graph(3), ring=ring)
    net = net_graph()
    r6 = ring_for(6, 2)
    # the net minus vertex 1 has components {2, 3, 5, 6} and {4}
    p = ps_ideal(net, {1}, ring=r6)
    assert p.contains(r6.x(1)) and p.contains(r6.delta(5, 6))
    assert not p.contains(r6.delta(2, 4))
    assert height(p) == cut_sets(net).height_of(frozenset({1})) == 2 + 3
    with pytest.raises(InputError):
        ps_ideal(path_graph(3), {4}, ring=ring)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}e{len(g.edges)}")
def test_dimension_by_groebner_equals_combinatorial(g):
    # independent routes: leading-term dimension of J(G) vs 2n - grade
    ring = ring_for(g.n, 3)
    assert krull_dimension(bei(g, ring=ring)) == 2 * g.n - grade(g)


@pytest.mark.parametrize("g", [g for g in SMALL if g.n <= 3] + [path_graph(4), cycle_graph(4)],
                         ids=lambda g: f"n{g.n}e{len(g.edges)}")
def test_prime_heights(g):
    ring = ring_for(g.n, 2)
    report = cut_sets(g)
    for s in report.sets:
        assert height(ps_ideal(g, s, ring=ring)) == report.height_of(s)


@pytest.mark.parametrize("g", [g for g in SMALL if g.n <= 4 and g.is_connected()], ids=lambda g: f"n{g.n}e{len(g.edges)}")
def test_primary_decomposition_report(g):
    r = check_primary_decomposition(g, 3)
    assert r.passed and r.witness is None
    assert r.details["cut_sets"][0] == []


@settings(max_examples=25)
@given(graphs(min_n=2, max_n=5))
def test_delta_membership_matches_edge_criterion(g):
    f = max_linear_forest(g)
    for s in cut_sets(f.graph).sets:
        assert delta_in_ps_matches_criterion(g, f.edges, s)


def test_delta_membership_on_a_cover():
    g = net_graph()
    assert find_lf_cover(g) is None
    g5 = cycle_graph(5)
    cover = find_lf_cover(g5)
    assert delta_in_ps_matches_criterion(g5, cover.forest.edges, cover.s, 3)


@pytest.mark.parametrize("g", [g for g in SMALL if g.edges and g.n <= 4], ids=lambda g: f"n{g.n}e{len(g.edges)}")
def test_regular_sequence_iff_linear_forest(g):
    ok, idx = regular_sequence_check(g.sorted_edges, g.n, 2)
    assert ok == is_linear_forest(g.n, g.edges)
    assert (idx is None) == ok


def test_regular_sequence_examples():
    assert regular_sequence_check([(1, 2), (2, 3), (1, 3)], 3, 3) == (False, 3)
    assert regular_sequence_check([(1, 2), (3, 4)], 4, 3) == (True, None)
    assert regular_sequence_check([(1, 2), (1, 2)], 3, 2) == (False, 2)
    with pytest.raises(InputError):
        regular_sequence_check([], 3)


def test_z_values():
    ring = ring_for(5, 2)
    assert z_value(1, 5, ring=ring) == ring.x(2) * ring.x(3) * ring.y(4)
    assert z_value(2, 5, 1, 4, ring=ring) == ring.y(2) * ring.y(3)
    assert z_value(0, 5, 2, 3, ring=ring) == ring.one()
    assert z_value(0, 5, ring=ring) == ring.x(2) * ring.x(3) * ring.x(4)
    assert z_value(3, 5, ring=ring) == ring.y(2) * ring.y(3) * ring.y(4)
    for bad in [dict(l=4, n=5), dict(l=0, n=5, i=1), dict(l=0, n=5, i=3, j=2), dict(l=2, n=5, i=1, j=3)]:
        with pytest.raises(InputError):
            z_value(ring=ring, **bad)


def test_root_candidate_contains_path_ideal():
    ring = ring_for(4, 3)
    b = root_candidate(4, ring=ring)
    assert b.contains_ideal(path_ideal(4, ring=ring))
    assert not path_ideal(4, ring=ring).contains_ideal(b)
    with pytest.raises(InputError):
        root_candidate(2)


def test_hamiltonian_relabel():
    g = Graph.from_edges(4, [(1, 3), (3, 2), (2, 4), (4, 1)])
    h, cycle = hamiltonian_relabel(g)
    assert cycle_graph(4).edges <= h.edges
    assert sorted(cycle) == [1, 2, 3, 4]
    with pytest.raises(InputError):
        hamiltonian_relabel(path_graph(4))


@pytest.mark.parametrize("p", [2, 3])
def test_colon_theorem_reports(p):
    reports = verify_colon_theorem(cycle_graph(4), p)
    assert [r.name for r in reports] == ["b-in-colon", "colon-equals-b", "colon-by-delta-1n"]
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_membership_checks(n):
    z = zprop_check(n, 3)
    assert z.passed and z.details["memberships"] == sum(j - i for i in range(1, n + 1) for j in range(i + 1, n + 1))
    assert grading_prop_check(n, 3).details["memberships"] == 2 ** (n - 2)
    assert z_nonzero_check(n, 3).passed


def test_root_ass_and_regseq_suites():
    assert all(r.passed for r in verify_root_ass(4, 3))
    reports = regseq_suite(4, 3)
    assert [r.name for r in reports] == [
        "regseq-path", "regseq-triangle-fails", "regseq-claw-fails", "claw-colon-is-triangle"
    ]
    assert all(r.passed for r in reports)


def test_report_serialisation():
    r = CheckReport("demo", {"n": 3}, False, "because")
    assert r.line() == "FAIL demo n=3 (because)"
    data = json.loads(reports_to_json([r]))
    assert data == [{"name": "demo", "inputs": {"n": 3}, "passed": False, "witness": "because", "details": {}}]


def test_ring_bounds():
    with pytest.raises(InputError):
        ring_for(1)
    with pytest.raises(InputError):
        ring_for(8)
