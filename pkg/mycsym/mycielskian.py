"""Mycielskian constructions.

Vertex u_i^s of the generalized Mycielskian is stored at index ``s * n + i`` (level-major) and the
root w is the last vertex, ``n * (t + 1)``.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from .graph import Graph, complete_graph, induced_subgraph, isolated_vertices, to_networkx
from .search import is_automorphism
from .utils import ConstructionError, GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Original:
    index: int

    @property
    def level(self) -> int:
        return 0


@dataclass(frozen=True)
class Shadow:
    level: int
    index: int


@dataclass(frozen=True)
class Root:
    pass


Role = Union[Original, Shadow, Root]


@dataclass(frozen=True)
class MycGraph:
    graph: Graph
    base: Graph
    t: int

    @property
    def base_n(self) -> int:
        return self.base.n

    @property
    def root(self) -> int:
        return self.base_n * (self.t + 1)

    def role(self, v: int) -> Role:
        return vertex_role(self, v)

    def level(self, v: int) -> int:
        return level_of(self, v)

    def level_vertices(self, s: int) -> range:
        return range(s * self.base_n, (s + 1) * self.base_n)

    def to_json(self) -> Dict:
        roles = []
        for v in self.graph.vertices():
            role = self.role(v)
            if isinstance(role, Root):
                roles.append(dict(vertex=v, kind='root'))
            else:
                roles.append(dict(vertex=v, kind='original' if role.level == 0 else 'shadow', level=role.level, index=role.index))
        return dict(t=self.t, base_n=self.base_n, root=self.root, roles=roles)


def generalized_mycielskian(graph: Graph, t: int) -> MycGraph:
    if t < 1:
        raise ConstructionError(f"Number of levels must be at least 1, got t={t}")
    if graph.n == 0:
        raise ConstructionError("The Mycielskian of the empty vertex set is undefined")
    n = graph.n
    base_edges = list(graph.edges())
    edges = list(base_edges)
    for s in range(t):
        for i, j in base_edges:
            edges.append((s * n + i, (s + 1) * n + j))
            edges.append((s * n + j, (s + 1) * n + i))
    root = n * (t + 1)
    edges.extend((t * n + i, root) for i in range(n))
    result = MycGraph(Graph.from_edges(root + 1, edges), graph, t)
    logger.debug(f"Built mu_{t} of {graph}: {result.graph}")
    return result


def mycielskian(graph: Graph) -> MycGraph:
    return generalized_mycielskian(graph, 1)


def iterated_mycielskian(graph: Graph, k: int) -> MycGraph:
    """mu^k(G); only the outermost application keeps its roles"""
    if k < 1:
        raise ConstructionError(f"Number of iterations must be at least 1, got k={k}")
    result = mycielskian(graph)
    for _ in range(k - 1):
        result = mycielskian(result.graph)
    return result


def classical_mycielskian(k: int) -> MycGraph:
    """M_k = mu^k(K_2)"""
    if k < 1:
        raise ConstructionError(f"Classical Mycielskian index must be at least 1, got k={k}")
    return iterated_mycielskian(complete_graph(2), k)


def vertex_role(myc: MycGraph, v: int) -> Role:
    if not 0 <= v < myc.graph.n:
        raise GraphError(f"Vertex {v} out of range [0, {myc.graph.n})")
    if v == myc.root:
        return Root()
    level, index = divmod(v, myc.base_n)
    return Original(index) if level == 0 else Shadow(level, index)


def level_of(myc: MycGraph, v: int) -> int:
    """Level of v; the root sits one above the top level"""
    role = vertex_role(myc, v)
    return myc.t + 1 if isinstance(role, Root) else role.level


def vertex_index(myc: MycGraph, role: Role) -> int:
    if isinstance(role, Root):
        return myc.root
    if not (0 <= role.index < myc.base_n and 0 <= role.level <= myc.t):
        raise GraphError(f"{role} does not exist in mu_{myc.t} of a {myc.base_n}-vertex graph")
    return role.level * myc.base_n + role.index


@dataclass(frozen=True)
class RootComponent:
    graph: Graph
    vertices: Tuple[int, ...]
    roles: Tuple[Role, ...]
    star: bool

    @property
    def root(self) -> int:
        return self.roles.index(Root())

    def index_of(self, v: int) -> int:
        """Position in the component of vertex v of the whole Mycielskian"""
        return self.vertices.index(v)


def root_component(myc: MycGraph) -> RootComponent:
    """Connected component of the root; a star when the base graph is edgeless"""
    vertices = tuple(sorted(nx.node_connected_component(to_networkx(myc.graph), myc.root)))
    star = myc.base.edge_count == 0
    if star:
        logger.warning(f"Base graph of mu_{myc.t} is edgeless; the root component is a star")
    return RootComponent(
        graph=induced_subgraph(myc.graph, vertices),
        vertices=vertices,
        roles=tuple(myc.role(v) for v in vertices),
        star=star,
    )


def expected_degree(myc: MycGraph, v: int) -> int:
    role = myc.role(v)
    if isinstance(role, Root):
        return myc.base_n
    base_degree = myc.base.degree(role.index)
    return base_degree + 1 if role.level == myc.t else 2 * base_degree


def check_degree_laws(myc: MycGraph) -> List[str]:
    violations = [
        f"deg({myc.role(v)}) = {myc.graph.degree(v)}, expected {expected_degree(myc, v)}"
        for v in myc.graph.vertices()
        if myc.graph.degree(v) != expected_degree(myc, v)
    ]
    if induced_subgraph(myc.graph, myc.level_vertices(0)) != myc.base:
        violations.append("level 0 does not induce the base graph")
    return violations


def check_level_structure(myc: MycGraph, perm: Sequence[int]) -> List[str]:
    """Violations of: root fixed, levels preserved, level 0 restricted to Aut(G)"""
    violations = []
    if perm[myc.root] != myc.root:
        violations.append(f"root {myc.root} moved to {perm[myc.root]}")
    moved = [v for v in myc.graph.vertices() if myc.level(perm[v]) != myc.level(v)]
    if moved:
        violations.append(f"levels not preserved at vertices {moved}")
    else:
        restriction = tuple(perm[i] for i in myc.level_vertices(0))
        if not is_automorphism(myc.base, restriction):
            violations.append(f"restriction {restriction} to level 0 is not an automorphism of the base graph")
    return violations


def pendant_vertices(myc: MycGraph) -> List[int]:
    """Top-level shadows of isolated base vertices, the pendants at the root"""
    return [myc.t * myc.base_n + i for i in sorted(isolated_vertices(myc.base))]
