"""Constrained automorphism search.

Backtracking over individualization and colour refinement: the domain side individualizes the
lowest vertex of the first non-singleton cell, the image side tries every vertex of the matching
cell in increasing order, and a branch survives only while both refinements produce the same trace.
Discrete leaves give candidate permutations that are verified before being yielded.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from .graph import Graph, Perm, VertexSet, check_vertex_set, to_networkx
from .utils import GraphError, Settings

logger = logging.getLogger(__name__)
logger_trace = logging.getLogger('mycsym.trace')

EdgeColoring = Mapping[Tuple[int, int], int]


@dataclass(frozen=True)
class Coloring:
    color: Tuple[int, ...]
    d: int

    def __post_init__(self):
        bad = [c for c in self.color if not 1 <= c <= self.d]
        if bad:
            raise GraphError(f"Colors {sorted(set(bad))} outside [1, {self.d}]")

    @classmethod
    def of(cls, colors: Sequence[int], d: int = None) -> 'Coloring':
        colors = tuple(colors)
        return cls(colors, d if d is not None else max(colors, default=1))

    @classmethod
    def from_class(cls, n: int, members, inside: int = 2, outside: int = 1) -> 'Coloring':
        """Two-coloring with members in color `inside`"""
        members = frozenset(members)
        return cls(tuple(inside if v in members else outside for v in range(n)), max(inside, outside))

    def classes(self) -> Dict[int, List[int]]:
        result = {}
        for v, c in enumerate(self.color):
            result.setdefault(c, []).append(v)
        return result

    def __len__(self):
        return len(self.color)


@dataclass(frozen=True)
class SearchConstraint:
    fixed: FrozenSet[int] = frozenset()
    coloring: Optional[Coloring] = None
    exclude_identity: bool = False
    edge_coloring: Optional[EdgeColoring] = field(default=None, hash=False, compare=False)
    mapping: Optional[Tuple[int, int]] = None

    def validate(self, graph: Graph):
        check_vertex_set(graph, self.fixed)
        if self.coloring is not None and len(self.coloring) != graph.n:
            raise GraphError(f"Coloring has length {len(self.coloring)}, graph has {graph.n} vertices")
        if self.edge_coloring is not None:
            missing = [e for e in graph.edges() if e not in self.edge_coloring]
            if missing:
                raise GraphError(f"Edge coloring misses edges {missing[:5]}")
        if self.mapping is not None:
            check_vertex_set(graph, self.mapping)


@dataclass
class Enumeration:
    perms: List[Perm]
    saturated: bool

    def __len__(self):
        return len(self.perms)


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_automorphism(graph: Graph, perm: Sequence[int]) -> bool:
    if len(perm) != graph.n:
        raise GraphError(f"Permutation has length {len(perm)}, graph has {graph.n} vertices")
    if sorted(perm) != list(range(graph.n)):
        return False
    return all(frozenset(perm[u] for u in graph.adj[v]) == graph.adj[perm[v]] for v in graph.vertices())


def _edge_colors(graph: Graph, edge_coloring: Optional[EdgeColoring]):
    if edge_coloring is None:
        return None
    colors = [dict() for _ in graph.vertices()]
    for (u, v), c in edge_coloring.items():
        colors[u][v] = colors[v][u] = c
    return colors


def _initial_colors(graph: Graph, constraint: SearchConstraint) -> Tuple[int, ...]:
    keys = [
        (
            graph.degree(v),
            constraint.coloring.color[v] if constraint.coloring else 0,
            v if v in constraint.fixed else -1,
        )
        for v in graph.vertices()
    ]
    return _renumber(keys)


def _renumber(keys) -> Tuple[int, ...]:
    index = {key: i for i, key in enumerate(sorted(set(keys)))}
    return tuple(index[key] for key in keys)


def _refine(graph: Graph, colors: Tuple[int, ...], edge_colors) -> Tuple[Tuple[int, ...], Tuple]:
    """Equitable refinement with a label-independent trace"""
    trace = []
    cells = len(set(colors))
    while True:
        if edge_colors is None:
            signatures = [(colors[v], tuple(sorted(colors[u] for u in graph.adj[v]))) for v in graph.vertices()]
        else:
            signatures = [
                (colors[v], tuple(sorted((colors[u], edge_colors[v][u]) for u in graph.adj[v])))
                for v in graph.vertices()
            ]
        trace.append(tuple(sorted(Counter(signatures).items())))
        refined = _renumber(signatures)
        count = len(set(refined))
        if count == cells:
            return refined, tuple(trace)
        colors, cells = refined, count


def _individualize(colors: Tuple[int, ...], v: int) -> Tuple[int, ...]:
    return _renumber([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


class _Search:
    def __init__(self, graph: Graph, constraint: SearchConstraint):
        self.graph = graph
        self.constraint = constraint
        self.edge_colors = _edge_colors(graph, constraint.edge_coloring)
        self.nodes = 0

    def run(self) -> Iterator[Perm]:
        graph, constraint = self.graph, self.constraint
        left, _ = _refine(graph, _initial_colors(graph, constraint), self.edge_colors)
        right = left
        if constraint.mapping is not None:
            v, u = constraint.mapping
            if left[v] != left[u]:
                return
            left, left_trace = _refine(graph, _individualize(left, v), self.edge_colors)
            right, right_trace = _refine(graph, _individualize(right, u), self.edge_colors)
            if left_trace != right_trace:
                return
        yield from self.search(left, right, 0)

    def search(self, left, right, depth) -> Iterator[Perm]:
        self.nodes += 1
        sizes = Counter(left)
        targets = [c for c in sorted(sizes) if sizes[c] > 1]
        if not targets:
            perm = self.leaf(left, right)
            if perm is not None:
                yield perm
            return
        target = targets[0]
        v = min(x for x, c in enumerate(left) if c == target)
        left_next, left_trace = _refine(self.graph, _individualize(left, v), self.edge_colors)
        for u in [x for x, c in enumerate(right) if c == target]:
            right_next, right_trace = _refine(self.graph, _individualize(right, u), self.edge_colors)
            if right_trace != left_trace:
                logger_trace.debug(f"depth={depth} {v}->{u} pruned")
                continue
            yield from self.search(left_next, right_next, depth + 1)

    def leaf(self, left, right) -> Optional[Perm]:
        image = {c: u for u, c in enumerate(right)}
        perm = tuple(image[c] for c in left)
        if self.constraint.exclude_identity and perm == identity(self.graph.n):
            return None
        if not is_automorphism(self.graph, perm):
            return None
        if self.edge_colors is not None:
            ecol = self.edge_colors
            if any(ecol[perm[u]][perm[v]] != ecol[u][v] for u, v in self.graph.edges()):
                return None
        return perm


def automorphisms(graph: Graph, constraint: SearchConstraint = None) -> Iterator[Perm]:
    """All automorphisms satisfying the constraint, in deterministic search order"""
    constraint = constraint or SearchConstraint()
    constraint.validate(graph)
    if graph.n == 0:
        if not constraint.exclude_identity:
            yield ()
        return
    yield from _Search(graph, constraint).run()


def find_automorphism(graph: Graph, constraint: SearchConstraint = None) -> Optional[Perm]:
    return next(automorphisms(graph, constraint), None)


def is_trivial_group(graph: Graph) -> bool:
    return find_automorphism(graph, SearchConstraint(exclude_identity=True)) is None


def enumerate_automorphisms(graph: Graph, cap: int = None) -> Enumeration:
    """Automorphisms up to `cap` (MYCSYM_AUT_CAP when omitted), flagged when the cap was hit"""
    cap = cap if cap is not None else Settings.from_env().aut_cap
    if cap < 1:
        raise GraphError(f"cap must be at least 1, got {cap}")
    perms = list(islice(automorphisms(graph), cap + 1))
    saturated = len(perms) > cap
    if saturated:
        logger.info(f"Automorphism enumeration of {graph} saturated at cap={cap}")
    return Enumeration(perms[:cap], saturated)


def orbits(graph: Graph, fixed: VertexSet = frozenset(), coloring: Coloring = None) -> List[Tuple[int, ...]]:
    """Orbit partition of the pointwise stabilizer of `fixed`, ordered by lowest member"""
    fixed = check_vertex_set(graph, fixed)
    base = SearchConstraint(fixed=fixed, coloring=coloring)
    cells, _ = _refine(graph, _initial_colors(graph, base), None)
    uf = UnionFind(graph.vertices())
    for v in graph.vertices():
        failed = set()
        for u in range(v + 1, graph.n):
            if cells[u] != cells[v] or uf[u] == uf[v] or uf[u] in failed:
                continue
            perm = find_automorphism(graph, SearchConstraint(fixed=fixed, coloring=coloring, mapping=(v, u)))
            if perm is None:
                failed.add(uf[u])
                continue
            for x in graph.vertices():
                uf.union(x, perm[x])
            failed = {uf[x] for x in failed}
    return sorted((tuple(sorted(orbit)) for orbit in uf.to_sets()), key=lambda orbit: orbit[0])


def are_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if first.degree_sequence() != second.degree_sequence():
        return False
    return nx.is_isomorphic(to_networkx(first), to_networkx(second))
