"""Open-neighborhood twins, minimum twin covers and the twin quotient graph."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Tuple

from .graph import Graph, VertexSet, disjoint_union, empty_graph, isolated_vertices
from .mycielskian import generalized_mycielskian
from .search import are_isomorphic
from .utils import TwinCoverError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinPartition:
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def class_of(self) -> Dict[int, int]:
        return {v: i for i, members in enumerate(self.classes) for v in members}

    @property
    def twin_free(self) -> bool:
        return all(len(members) == 1 for members in self.classes)

    def largest(self) -> Tuple[int, ...]:
        return max(self.classes, key=len)


@dataclass(frozen=True)
class TwinCover:
    members: VertexSet
    excluded: Tuple[int, ...]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class QuotientGraph:
    graph: Graph
    class_of: Tuple[int, ...]
    rep_of: Tuple[int, ...]
    partition: TwinPartition


def twin_partition(graph: Graph) -> TwinPartition:
    groups = {}
    for v in graph.vertices():
        groups.setdefault(graph.masks[v], []).append(v)
    return TwinPartition(tuple(sorted((tuple(members) for members in groups.values()), key=lambda members: members[0])))


def is_twin_free(graph: Graph) -> bool:
    return twin_partition(graph).twin_free


def has_twins(graph: Graph) -> bool:
    return not is_twin_free(graph)


def minimum_twin_cover(graph: Graph) -> TwinCover:
    """All vertices except the lowest-index member of each twin class"""
    classes = twin_partition(graph).classes
    return TwinCover(
        members=frozenset(v for members in classes for v in members[1:]),
        excluded=tuple(members[0] for members in classes),
    )


def is_minimum_twin_cover(graph: Graph, vertices: Iterable[int]) -> bool:
    vertices = frozenset(vertices)
    return all(len(set(members) - vertices) == 1 for members in twin_partition(graph).classes)


def quotient_graph(graph: Graph) -> QuotientGraph:
    partition = twin_partition(graph)
    class_of = partition.class_of
    reps = tuple(members[0] for members in partition.classes)
    quotient = Graph.from_edges(
        len(reps), ((i, class_of[u]) for i, rep in enumerate(reps) for u in graph.adj[rep]),
    )
    assert is_twin_free(quotient), f"quotient of {graph} is not twin-free"
    return QuotientGraph(quotient, tuple(class_of[v] for v in graph.vertices()), reps, partition)


def image_of_set(quotient: QuotientGraph, vertices: Iterable[int]) -> VertexSet:
    """B -> {[x] : x in B}"""
    return frozenset(quotient.class_of[v] for v in vertices)


def lift_determining_set(graph: Graph, quotient_set: Iterable[int], cover: TwinCover = None) -> VertexSet:
    """S = T u R where R = {x : [x] in S~ minus T~}"""
    cover = cover or minimum_twin_cover(graph)
    quotient = quotient_graph(graph)
    cover_image = image_of_set(quotient, cover.members)
    extra = set(quotient_set) - cover_image
    return cover.members | frozenset(v for v in graph.vertices() if quotient.class_of[v] in extra)


def lifted_cover(graph: Graph, cover: TwinCover, t: int) -> VertexSet:
    """Twin cover of mu_t(G) built from a minimum twin cover of G"""
    if not is_minimum_twin_cover(graph, cover.members):
        raise TwinCoverError(f"{sorted(cover.members)} is not a minimum twin cover of {graph}")
    n = graph.n
    lifted = {s * n + i for i in cover.members for s in range(t + 1)}
    isolated = sorted(isolated_vertices(graph) - cover.members)
    if isolated:
        u = isolated[0]
        lifted.update(s * n + u for s in range(1, t))
    return frozenset(lifted)


def lifted_cover_size(graph: Graph, cover: TwinCover, t: int) -> int:
    extra = t - 1 if isolated_vertices(graph) else 0
    return (t + 1) * len(cover) + extra


def twins_lift_check(graph: Graph, t: int) -> bool:
    """Twin pairs of G are exactly the pairs twinned on every level of mu_t(G), and no pair is twinned on only some levels"""
    myc = generalized_mycielskian(graph, t)
    masks = myc.graph.masks
    n = graph.n
    for i in range(n):
        for j in range(i + 1, n):
            levels = [masks[s * n + i] == masks[s * n + j] for s in range(t + 1)]
            twins = graph.masks[i] == graph.masks[j]
            if any(levels) != all(levels) or all(levels) != twins:
                logger.info(f"Twin lifting broken for ({i}, {j}) in mu_{t}: levels={levels}, twins in G={twins}")
                return False
    return True


def twin_pair_count(graph: Graph) -> int:
    return sum(len(members) * (len(members) - 1) // 2 for members in twin_partition(graph).classes)


def level_twin_pair_count(graph: Graph, t: int) -> int:
    """Twin pairs u_i^s, u_j^s sharing a level of mu_t(G), summed over the t + 1 levels"""
    masks = generalized_mycielskian(graph, t).graph.masks
    n = graph.n
    return sum(
        1 for s in range(t + 1) for i, j in combinations(range(n), 2) if masks[s * n + i] == masks[s * n + j]
    )


def quotient_commutes_check(graph: Graph, t: int) -> bool:
    """mu_t(G~) against (mu_t(G))~, padded by t-1 isolated vertices when G has isolated vertices"""
    left = generalized_mycielskian(quotient_graph(graph).graph, t).graph
    right = quotient_graph(generalized_mycielskian(graph, t).graph).graph
    if isolated_vertices(graph):
        right = disjoint_union(right, empty_graph(t - 1))
    return are_isomorphic(left, right)
