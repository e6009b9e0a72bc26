"""Finite simple undirected graphs on dense integer vertices, their constructors and ingestion formats."""
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .utils import GraphError, GraphFormatError

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]
Perm = Tuple[int, ...]

GRAPH6_HEADER = '>>graph6<<'
GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"Adjacency has {len(self.adj)} rows for {self.n} vertices")
        for v, neighbors in enumerate(self.adj):
            if v in neighbors:
                raise GraphError(f"Loop at vertex {v}")
            for u in neighbors:
                if not 0 <= u < self.n:
                    raise GraphError(f"Neighbor {u} of {v} out of range [0, {self.n})")
                if v not in self.adj[u]:
                    raise GraphError(f"Asymmetric adjacency between {v} and {u}")

    def __str__(self):
        return f'Graph(n={self.n}, m={self.edge_count})'

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        neighbors = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"Loop edge {u} {v}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u} {v} out of range [0, {n})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(frozenset(s) for s in neighbors))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Neighborhoods as bitsets"""
        return tuple(sum(1 << u for u in neighbors) for neighbors in self.adj)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(neighbors) for neighbors in self.adj), reverse=True))

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v, neighbors in enumerate(self.adj):
            for u in sorted(neighbors):
                if v < u:
                    yield v, u

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)


def parse_edge_list(text: str, n: int) -> Graph:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            u, v = map(int, parts)
        except ValueError:
            raise GraphFormatError(f"Malformed edge on line {lineno}: {line!r}") from None
        if u == v:
            raise GraphFormatError(f"Loop edge on line {lineno}: {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Vertex out of range [0, {n}) on line {lineno}: {line!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_edge_list_file(text: str) -> Graph:
    """Edge list with the vertex count on the first line"""
    lines = text.strip().splitlines()
    if not lines:
        raise GraphFormatError("Empty edge-list input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphFormatError(f"First line must be the vertex count, got {lines[0]!r}") from None
    return parse_edge_list('\n'.join(lines[1:]), n)


def strip_graph6_header(text: str) -> str:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def parse_graph6(text: str) -> Graph:
    s = strip_graph6_header(text)
    if not s:
        raise GraphFormatError("Empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphFormatError(f"Non-printable or out-of-range character in graph6 string {s!r}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"Bad length byte {s[0]!r}: only graphs with n <= {GRAPH6_MAX_N} are supported")
    expected = -(-(n * (n - 1) // 2) // 6)
    if len(s) - 1 < expected:
        raise GraphFormatError(f"Truncated graph6 bit stream: expected {expected} data bytes, got {len(s) - 1}")
    if len(s) - 1 > expected:
        raise GraphFormatError(f"Trailing data in graph6 string: expected {expected} data bytes, got {len(s) - 1}")
    return from_networkx(nx.from_graph6_bytes(s.encode('ascii')))


def encode_graph6(graph: Graph) -> str:
    if graph.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"Cannot encode n={graph.n} > {GRAPH6_MAX_N} in single-byte graph6")
    return nx.to_graph6_bytes(to_networkx(graph), nodes=range(graph.n), header=False).decode('ascii').strip()


def read_graphs(path) -> List[Graph]:
    """Read a graph6 file (one graph per line) or an edge-list file (first line is n)"""
    text = Path(path).read_text()
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError(f"No graphs in {path}")
    if lines[0].strip().isdigit():
        graphs = [parse_edge_list_file(text)]
    else:
        graphs = [parse_graph6(line) for line in lines]
    logger.debug(f"Read {len(graphs)} graphs from {path}")
    return graphs


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def from_networkx(g: nx.Graph) -> Graph:
    index = {node: i for i, node in enumerate(sorted(g.nodes))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in g.edges))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"Cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def star_graph(m: int) -> Graph:
    """K_{1,m} with center 0"""
    if m < 0:
        raise GraphError(f"Star needs m >= 0, got {m}")
    return Graph.from_edges(m + 1, ((0, leaf) for leaf in range(1, m + 1)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges())
        offset += graph.n
    return Graph.from_edges(offset, edges)


def relabel(graph: Graph, perm: Sequence[int]) -> Graph:
    """Copy of graph with vertex v renamed perm[v]"""
    if sorted(perm) != list(range(graph.n)):
        raise GraphError(f"Not a permutation of {graph.n} vertices: {perm}")
    return Graph.from_edges(graph.n, ((perm[u], perm[v]) for u, v in graph.edges()))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on vertices, renumbered in increasing order"""
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(
        len(order), ((index[u], index[v]) for u, v in graph.edges() if u in index and v in index),
    )


def open_neighborhood(graph: Graph, v: int) -> VertexSet:
    if not 0 <= v < graph.n:
        raise GraphError(f"Vertex {v} out of range [0, {graph.n})")
    return graph.adj[v]


def isolated_vertices(graph: Graph) -> VertexSet:
    return frozenset(v for v in graph.vertices() if not graph.adj[v])


def is_star(graph: Graph) -> bool:
    """True iff graph is K_{1,m} for some m >= 0, including K_1 and K_2"""
    if graph.n == 1:
        return True
    if graph.n < 2 or graph.edge_count != graph.n - 1:
        return False
    degrees = graph.degree_sequence()
    return degrees[0] == graph.n - 1 and all(d == 1 for d in degrees[1:])


def check_vertex_set(graph: Graph, vertices: Iterable[int]) -> VertexSet:
    members = frozenset(vertices)
    bad = [v for v in members if not 0 <= v < graph.n]
    if bad:
        raise GraphError(f"Vertices {sorted(bad)} out of range [0, {graph.n})")
    return members
