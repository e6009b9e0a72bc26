from itertools import combinations, permutations, product

import pytest
from hypothesis import strategies as st

from mycsym.graph import Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from mycsym.harness import load_theorems


def brute_automorphisms(graph: Graph):
    edges = set(graph.edges())
    result = []
    for perm in permutations(range(graph.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            result.append(perm)
    return result


def brute_det(graph: Graph) -> int:
    perms = brute_automorphisms(graph)
    for k in range(graph.n + 1):
        for chosen in combinations(range(graph.n), k):
            if sum(1 for perm in perms if all(perm[v] == v for v in chosen)) == 1:
                return k
    raise AssertionError("unreachable")


def brute_dist(graph: Graph) -> int:
    moving = [perm for perm in brute_automorphisms(graph) if perm != tuple(range(graph.n))]
    for d in range(1, graph.n + 1):
        for colors in product(range(d), repeat=graph.n):
            if not any(all(colors[perm[v]] == colors[v] for v in range(graph.n)) for perm in moving):
                return d
    raise AssertionError("unreachable")


def brute_rho(graph: Graph):
    """Smallest color class of a 2-distinguishing coloring, None when there is none"""
    perms = brute_automorphisms(graph)
    best = None
    for k in range(graph.n + 1):
        for chosen in combinations(range(graph.n), k):
            chosen = set(chosen)
            stable = [perm for perm in perms if all((perm[v] in chosen) == (v in chosen) for v in range(graph.n))]
            if len(stable) == 1:
                size = min(k, graph.n - k)
                best = size if best is None else min(best, size)
    return best


@st.composite
def small_graphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture(scope='session', autouse=True)
def theorems():
    load_theorems()


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k2_3k1():
    return disjoint_union(complete_graph(2), empty_graph(3))


@pytest.fixture
def write_graph(tmp_path):
    def write(text: str, name: str = 'graph.txt'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
