import pytest
from hypothesis import given

from mycsym.graph import (
    Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, encode_graph6, induced_subgraph, is_star,
    isolated_vertices, open_neighborhood, parse_edge_list, parse_graph6, path_graph, read_graphs, star_graph,
)
from mycsym.utils import GraphError, GraphFormatError

from .conftest import small_graphs


def test_k2_graph6():
    assert encode_graph6(complete_graph(2)) == 'A_'
    assert parse_graph6('A_') == complete_graph(2)


def test_graph6_header_is_stripped():
    assert parse_graph6('>>graph6<<A_') == complete_graph(2)


@given(small_graphs(max_n=8))
def test_graph6_preserves_graph(graph):
    assert parse_graph6(encode_graph6(graph)) == graph


@pytest.mark.parametrize('text', ['', 'D', 'A_?', 'A ', '~'])
def test_malformed_graph6(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


def test_graph_format_error_is_value_error():
    with pytest.raises(ValueError):
        parse_graph6('')


def test_edge_list():
    graph = parse_edge_list('0 1\n# comment\n1 2  # trailing\n\n', 3)
    assert sorted(graph.edges()) == [(0, 1), (1, 2)]
    assert graph.degree(1) == 2


@pytest.mark.parametrize('text', ['0 0', '0 3', '0', 'a b', '0 1 2'])
def test_malformed_edge_list(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text, 3)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


def test_read_graphs(write_graph):
    assert read_graphs(write_graph('A_\nBw\n')) == [complete_graph(2), complete_graph(3)]
    assert read_graphs(write_graph('3\n0 1\n1 2\n')) == [Graph.from_edges(3, [(0, 1), (1, 2)])]


def test_read_empty_file(write_graph):
    with pytest.raises(GraphFormatError):
        read_graphs(write_graph('\n\n'))


def test_constructors():
    assert cycle_graph(5).edge_count == 5
    assert set(cycle_graph(5).degree_sequence()) == {2}
    assert disjoint_union(complete_graph(2), empty_graph(3)).n == 5
    assert isolated_vertices(disjoint_union(complete_graph(2), empty_graph(3))) == frozenset({2, 3, 4})
    assert induced_subgraph(cycle_graph(5), [0, 1, 2]) == Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_is_star():
    assert is_star(complete_graph(1))
    assert is_star(complete_graph(2))
    assert is_star(star_graph(4))
    assert not is_star(complete_graph(3))
    assert not is_star(empty_graph(2))


def test_open_neighborhood():
    graph = cycle_graph(5)
    assert open_neighborhood(graph, 0) == {1, 4}
    assert open_neighborhood(empty_graph(2), 1) == frozenset()
    with pytest.raises(GraphError):
        open_neighborhood(graph, 5)


@given(small_graphs())
def test_open_neighborhood_is_irreflexive_and_symmetric(graph):
    for v in graph.vertices():
        neighbors = open_neighborhood(graph, v)
        assert v not in neighbors
        assert all(v in open_neighborhood(graph, u) for u in neighbors)


def test_masks():
    assert path_graph(3).masks == (0b010, 0b101, 0b010)
    assert empty_graph(2).masks == (0, 0)
