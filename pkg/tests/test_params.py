from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mycsym.graph import Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph, star_graph
from mycsym.harness import generalized
from mycsym.mycielskian import classical_mycielskian
from mycsym.params import (
    BUDGET_EXCEEDED, EXACT, NOT_2_DISTINGUISHABLE, UNDEFINED, cost_2_distinguishing, determining_number,
    distinguishing_index, distinguishing_number, forced_twin_vertices, is_determining_set, is_distinguishing_coloring,
    is_distinguishing_edge_coloring, minimum_determining_sets, param_report,
)
from mycsym.search import Coloring, orbits
from mycsym.twins import twin_partition
from mycsym.utils import CACHE_SIZE, GraphError

from .conftest import brute_automorphisms, brute_det, brute_dist, brute_rho, small_graphs

ASYMMETRIC = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])


def brute_index(graph: Graph):
    edges = list(graph.edges())
    perms = brute_automorphisms(graph)
    for d in range(1, len(edges) + 2):
        for colors in product(range(d), repeat=len(edges)):
            color = dict(zip(edges, colors))
            stable = [
                perm for perm in perms
                if all(color[tuple(sorted((perm[u], perm[v])))] == c for (u, v), c in color.items())
            ]
            if len(stable) == 1:
                return d
    return None


@pytest.mark.parametrize('graph, value', [
    (complete_graph(1), 0),
    (complete_graph(2), 1),
    (disjoint_union(complete_graph(2), empty_graph(3)), 3),
    (cycle_graph(5), 2),
    (path_graph(4), 1),
    (complete_graph(4), 3),
    (star_graph(3), 2),
    (ASYMMETRIC, 0),
])
def test_determining_number(graph, value):
    result = determining_number(graph)
    assert result.value == value
    assert len(result.witness) == value
    assert is_determining_set(graph, result.witness)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=5))
def test_determining_number_matches_brute_force(graph):
    assert determining_number(graph).value == brute_det(graph)


def test_determining_number_containing():
    result = determining_number(cycle_graph(5), frozenset({0}))
    assert 0 in result.witness
    assert result.value == 2
    result = determining_number(path_graph(4), frozenset({0, 1}))
    assert result.witness == frozenset({0, 1})


def test_witness_is_lexicographically_least():
    assert determining_number(cycle_graph(5)).witness == frozenset({0, 1})
    assert determining_number(path_graph(4)).witness == frozenset({0})
    assert determining_number(complete_graph(4)).witness == frozenset({0, 1, 2})


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=5))
def test_witness_is_least_holding_forced_twins(graph):
    result = determining_number(graph)
    forced = forced_twin_vertices(graph)
    candidates = [
        frozenset(chosen) for chosen in combinations(range(graph.n), result.value)
        if forced <= set(chosen) and is_determining_set(graph, frozenset(chosen))
    ]
    assert result.witness == candidates[0]


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), st.data())
def test_singleton_orbits_iff_determining(graph, data):
    fixed = data.draw(st.frozensets(st.integers(min_value=0, max_value=graph.n - 1)))
    assert all(len(orbit) == 1 for orbit in orbits(graph, fixed)) == is_determining_set(graph, fixed)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), st.data())
def test_supersets_of_witness_stay_determining(graph, data):
    witness = determining_number(graph).witness
    extra = data.draw(st.frozensets(st.integers(min_value=0, max_value=graph.n - 1)))
    assert is_determining_set(graph, witness | extra)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6))
def test_witness_misses_at_most_one_twin(graph):
    witness = determining_number(graph).witness
    for members in twin_partition(graph).classes:
        assert len(set(members) - witness) <= 1


def test_out_of_range_set():
    with pytest.raises(GraphError):
        is_determining_set(path_graph(3), {3})


def test_minimum_determining_sets():
    assert minimum_determining_sets(path_graph(4)) == [frozenset({v}) for v in range(4)]
    assert len(minimum_determining_sets(cycle_graph(5))) == 10


@pytest.mark.parametrize('graph, value', [
    (complete_graph(1), 1),
    (cycle_graph(5), 3),
    (cycle_graph(6), 2),
    (complete_graph(4), 4),
    (path_graph(4), 2),
    (empty_graph(3), 3),
    (disjoint_union(complete_graph(2), empty_graph(3)), 3),
    (disjoint_union(cycle_graph(5), complete_graph(1)), 3),
    (ASYMMETRIC, 1),
])
def test_distinguishing_number(graph, value):
    result = distinguishing_number(graph)
    assert result.exact
    assert result.value == value
    assert is_distinguishing_coloring(graph, result.witness)


def test_grotzsch_graph_is_2_distinguishable():
    graph = classical_mycielskian(2).graph
    assert distinguishing_number(graph).value == 2


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=5))
def test_distinguishing_number_matches_brute_force(graph):
    result = distinguishing_number(graph)
    assert result.value == brute_dist(graph)
    assert is_distinguishing_coloring(graph, result.witness)
    assert result.value <= determining_number(graph).value + 1


def test_distinguishing_number_over_budget():
    result = distinguishing_number(cycle_graph(5), 1)
    assert not result.exact
    assert (result.lo, result.hi) == (2, 3)
    assert result.value is None
    assert is_distinguishing_coloring(cycle_graph(5), result.witness)


@pytest.mark.parametrize('graph, status, value', [
    (cycle_graph(5), NOT_2_DISTINGUISHABLE, None),
    (complete_graph(3), NOT_2_DISTINGUISHABLE, None),
    (empty_graph(3), NOT_2_DISTINGUISHABLE, None),
    (complete_graph(2), EXACT, 1),
    (path_graph(4), EXACT, 1),
    (ASYMMETRIC, EXACT, 0),
])
def test_cost_2_distinguishing(graph, status, value):
    result = cost_2_distinguishing(graph)
    assert result.status == status
    assert result.value == value
    if result.exact:
        assert is_distinguishing_coloring(graph, Coloring.from_class(graph.n, result.witness))


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=5))
def test_cost_2_distinguishing_matches_brute_force(graph):
    result = cost_2_distinguishing(graph)
    expected = brute_rho(graph)
    if expected is None:
        assert result.status == NOT_2_DISTINGUISHABLE
    else:
        assert result.value == expected
        assert result.value >= determining_number(graph).value


def test_cost_2_distinguishing_over_budget():
    result = cost_2_distinguishing(cycle_graph(5), 1)
    assert result.status == BUDGET_EXCEEDED
    assert result.two_distinguishable is None
    assert result.lo == 2


@pytest.mark.parametrize('graph, value', [
    (complete_graph(3), 3),
    (path_graph(3), 2),
    (cycle_graph(4), 3),
    (cycle_graph(6), 2),
    (ASYMMETRIC, 1),
])
def test_distinguishing_index(graph, value):
    result = distinguishing_index(graph)
    assert result.value == value
    assert is_distinguishing_edge_coloring(graph, result.edge_coloring())


@pytest.mark.parametrize('graph', [
    complete_graph(2),
    empty_graph(2),
    disjoint_union(complete_graph(2), complete_graph(1)),
    disjoint_union(path_graph(3), complete_graph(2)),
])
def test_distinguishing_index_undefined(graph):
    result = distinguishing_index(graph)
    assert result.undefined
    assert result.value is None
    assert result.to_dict()['status'] == UNDEFINED


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=4))
def test_distinguishing_index_matches_brute_force(graph):
    result = distinguishing_index(graph)
    if result.undefined:
        assert brute_index(graph) is None
    else:
        assert result.value == brute_index(graph)


def test_distinguishing_index_over_budget():
    result = distinguishing_index(cycle_graph(6), 10)
    assert not result.exact
    assert (result.lo, result.hi) == (2, 6)


def test_param_report():
    report = param_report(path_graph(4), ['det', 'dist'])
    data = report.to_dict()
    assert data['det'] == dict(value=1, witness=sorted(report.det.witness))
    assert data['dist']['value'] == 2
    assert 'rho' not in data
    assert data['budget_exceeded'] == dict(dist=False, rho=False, dist_prime=False)


def test_param_report_all():
    data = param_report(cycle_graph(5)).to_dict()
    assert data['rho']['status'] == NOT_2_DISTINGUISHABLE
    assert data['dist']['value'] == 3
    assert data['dist_prime']['value'] == 3


@pytest.mark.parametrize('function', [
    determining_number, distinguishing_number, cost_2_distinguishing, distinguishing_index, generalized,
])
def test_caches_are_bounded(function):
    assert function.cache_info().maxsize == CACHE_SIZE
