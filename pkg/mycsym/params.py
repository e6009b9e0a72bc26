"""Symmetry parameters: determining number, distinguishing number, cost of 2-distinguishing and
distinguishing index, each computed exactly (or bracketed when a budget runs out) with a witness."""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graph import Graph, VertexSet, check_vertex_set, encode_graph6, induced_subgraph, isolated_vertices
from .search import Coloring, SearchConstraint, find_automorphism, is_trivial_group, orbits
from .twins import twin_partition
from .utils import CACHE_SIZE, DEFAULT_BUDGET

logger = logging.getLogger(__name__)

EXACT = 'exact'
NOT_2_DISTINGUISHABLE = 'not-2-distinguishable'
BUDGET_EXCEEDED = 'budget-exceeded'
UNDEFINED = 'undefined'

ALL_PARAMS = ('det', 'dist', 'rho', 'dist_prime')


@dataclass(frozen=True)
class DetResult:
    value: int
    witness: VertexSet

    def to_dict(self) -> Dict:
        return dict(value=self.value, witness=sorted(self.witness))


@dataclass(frozen=True)
class DistResult:
    lo: int
    hi: int
    witness: Optional[Coloring]

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.exact else None

    def to_dict(self) -> Dict:
        return dict(
            exact=self.exact, value=self.value, lo=self.lo, hi=self.hi,
            witness=list(self.witness.color) if self.witness else None,
        )


@dataclass(frozen=True)
class RhoResult:
    status: str
    value: Optional[int] = None
    witness: Optional[VertexSet] = None
    lo: int = 0

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    @property
    def two_distinguishable(self) -> Optional[bool]:
        """None when the budget ran out before deciding"""
        if self.status == BUDGET_EXCEEDED:
            return None
        return self.status == EXACT

    def to_dict(self) -> Dict:
        return dict(
            status=self.status, value=self.value, lo=self.lo,
            witness=sorted(self.witness) if self.witness is not None else None,
        )


@dataclass(frozen=True)
class IndexResult:
    lo: Optional[int]
    hi: Optional[int]
    witness: Optional[Tuple[Tuple[int, int, int], ...]]
    undefined: bool = False

    @property
    def exact(self) -> bool:
        return not self.undefined and self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.exact else None

    def edge_coloring(self) -> Dict[Tuple[int, int], int]:
        return {(u, v): c for u, v, c in self.witness or ()}

    def to_dict(self) -> Dict:
        if self.undefined:
            return dict(status=UNDEFINED, value=None)
        return dict(
            status=EXACT if self.exact else BUDGET_EXCEEDED, value=self.value, lo=self.lo, hi=self.hi,
            witness=[list(edge) for edge in self.witness] if self.witness else None,
        )


@dataclass
class ParamReport:
    graph: Graph
    det: Optional[DetResult] = None
    dist: Optional[DistResult] = None
    rho: Optional[RhoResult] = None
    dist_prime: Optional[IndexResult] = None
    budget: int = DEFAULT_BUDGET
    notes: List[str] = field(default_factory=list)

    @property
    def budget_exceeded(self) -> Dict[str, bool]:
        return dict(
            dist=self.dist is not None and not self.dist.exact,
            rho=self.rho is not None and self.rho.status == BUDGET_EXCEEDED,
            dist_prime=self.dist_prime is not None and not self.dist_prime.undefined and not self.dist_prime.exact,
        )

    def to_dict(self) -> Dict:
        result = dict(n=self.graph.n, m=self.graph.edge_count, budget=self.budget, budget_exceeded=self.budget_exceeded)
        if self.graph.n <= 62:
            result['graph6'] = encode_graph6(self.graph)
        for name in ALL_PARAMS:
            value = getattr(self, name)
            if value is not None:
                result[name] = value.to_dict()
        if self.notes:
            result['notes'] = self.notes
        return result


def is_determining_set(graph: Graph, vertices) -> bool:
    fixed = check_vertex_set(graph, vertices)
    return find_automorphism(graph, SearchConstraint(fixed=fixed, exclude_identity=True)) is None


def is_distinguishing_coloring(graph: Graph, coloring: Coloring) -> bool:
    return find_automorphism(graph, SearchConstraint(coloring=coloring, exclude_identity=True)) is None


def is_distinguishing_edge_coloring(graph: Graph, edge_coloring: Dict[Tuple[int, int], int]) -> bool:
    constraint = SearchConstraint(edge_coloring=edge_coloring, exclude_identity=True)
    return find_automorphism(graph, constraint) is None


def forced_twin_vertices(graph: Graph, containing: VertexSet = frozenset()) -> VertexSet:
    """Vertices that every determining set containing `containing` may be assumed to hold"""
    forced = set(containing)
    for members in twin_partition(graph).classes:
        rest = [v for v in members if v not in containing]
        forced.update(rest[1:])
    return frozenset(forced)


def least_determining_set(graph: Graph, seed: VertexSet, size: int) -> VertexSet:
    """Lexicographically least determining set of the given size that holds `seed`"""
    rest = sorted(set(graph.vertices()) - seed)
    for extra in combinations(rest, size - len(seed)):
        candidate = seed | frozenset(extra)
        if is_determining_set(graph, candidate):
            return candidate
    raise AssertionError(f"No determining set of size {size} holds {sorted(seed)} in {graph}")


@lru_cache(maxsize=CACHE_SIZE)
def determining_number(graph: Graph, containing: VertexSet = frozenset()) -> DetResult:
    """Smallest determining set, optionally among those containing `containing`"""
    containing = check_vertex_set(graph, containing)
    seed = forced_twin_vertices(graph, containing)
    stabilizers = {}

    def extend(chosen: VertexSet, budget: int) -> Optional[VertexSet]:
        if is_determining_set(graph, chosen):
            return chosen
        if budget == 0:
            return None
        if chosen not in stabilizers:
            stabilizers[chosen] = [orbit[0] for orbit in orbits(graph, chosen) if len(orbit) > 1]
        for rep in stabilizers[chosen]:
            found = extend(chosen | {rep}, budget - 1)
            if found is not None:
                return found
        return None

    for extra in range(graph.n - len(seed) + 1):
        found = extend(seed, extra)
        if found is not None:
            witness = least_determining_set(graph, seed, len(found))
            logger.debug(f"det({graph}, containing={sorted(containing)}) = {len(witness)}: {sorted(witness)}")
            return DetResult(len(witness), witness)
    raise AssertionError(f"No determining set found for {graph}")


def coloring_from_determining_set(graph: Graph, vertices: VertexSet) -> Coloring:
    """Distinct colors on the set, one more color on the rest"""
    order = {v: i for i, v in enumerate(sorted(vertices), 1)}
    k = len(order)
    if k == graph.n:
        return Coloring.of([order[v] for v in graph.vertices()], max(k, 1))
    return Coloring.of([order.get(v, k + 1) for v in graph.vertices()], k + 1)


@lru_cache(maxsize=CACHE_SIZE)
def cost_2_distinguishing(graph: Graph, budget: int = DEFAULT_BUDGET) -> RhoResult:
    """Smallest color class over all 2-distinguishing colorings"""
    if is_trivial_group(graph):
        return RhoResult(EXACT, 0, frozenset())
    classes = twin_partition(graph).classes
    if any(len(members) >= 3 for members in classes):
        return RhoResult(NOT_2_DISTINGUISHABLE)
    pairs = [members for members in classes if len(members) == 2]
    orbit_list = orbits(graph)
    start = max(1, determining_number(graph).value)
    examined = 0
    for k in range(start, graph.n // 2 + 1):
        for subset in _canonical_subsets(orbit_list, k):
            if any((a in subset) == (b in subset) for a, b in pairs):
                continue
            examined += 1
            if examined > budget:
                logger.info(f"rho({graph}): budget {budget} exhausted at class size {k}")
                return RhoResult(BUDGET_EXCEEDED, lo=k)
            if is_distinguishing_coloring(graph, Coloring.from_class(graph.n, subset)):
                return RhoResult(EXACT, k, subset, lo=k)
    return RhoResult(NOT_2_DISTINGUISHABLE)


def _canonical_subsets(orbit_list: Sequence[Tuple[int, ...]], k: int) -> Iterator[VertexSet]:
    """k-subsets holding the representative of the first orbit they meet, up to Aut(G)"""
    for i, orbit in enumerate(orbit_list):
        pool = [v for later in orbit_list[i:] for v in later if v != orbit[0]]
        for rest in combinations(sorted(pool), k - 1):
            yield frozenset((orbit[0],) + rest)


def _colorings(order: Sequence[int], forced: int, d: int, twins: Dict[int, Tuple[int, ...]], n: int) -> Iterator[List[int]]:
    """Colorings up to renaming colors, using exactly d colors, twins colored apart.
    The first `forced` vertices of `order` are mutual twins and receive 1..forced."""
    color = [0] * n
    for i in range(forced):
        color[order[i]] = i + 1

    def assign(position: int, used: int):
        if position == len(order):
            if used == d:
                yield list(color)
            return
        if used + len(order) - position < d:
            return
        v = order[position]
        taken = {color[u] for u in twins[v]}
        for c in range(1, min(d, used + 1) + 1):
            if c in taken:
                continue
            color[v] = c
            yield from assign(position + 1, max(used, c))
        color[v] = 0

    yield from assign(forced, forced)


def _distinguishing_with(graph: Graph, d: int, budget: int) -> Tuple[Optional[Coloring], bool]:
    """A d-distinguishing coloring, and whether the search was exhaustive"""
    if d == 2:
        rho = cost_2_distinguishing(graph, budget)
        if rho.exact:
            return Coloring.from_class(graph.n, rho.witness), True
        return None, rho.status == NOT_2_DISTINGUISHABLE
    partition = twin_partition(graph)
    largest = partition.largest()
    if d ** (graph.n - len(largest)) > budget:
        logger.info(f"dist({graph}): {d}^{graph.n - len(largest)} colorings exceed budget {budget}")
        return None, False
    class_of = partition.class_of
    twins = {v: tuple(u for u in partition.classes[class_of[v]] if u != v) for v in graph.vertices()}
    order = list(largest) + [v for v in graph.vertices() if v not in largest]
    for colors in _colorings(order, len(largest), d, twins, graph.n):
        coloring = Coloring.of(colors, d)
        if is_distinguishing_coloring(graph, coloring):
            return coloring, True
    return None, True


@lru_cache(maxsize=CACHE_SIZE)
def distinguishing_number(graph: Graph, budget: int = DEFAULT_BUDGET) -> DistResult:
    if graph.n == 0 or is_trivial_group(graph):
        return DistResult(1, 1, Coloring.of([1] * graph.n, 1))
    isolated = isolated_vertices(graph)
    if isolated and len(isolated) < graph.n:
        return _distinguishing_with_isolated(graph, isolated, budget)
    if isolated:
        return DistResult(graph.n, graph.n, Coloring.of(range(1, graph.n + 1)))
    largest = len(twin_partition(graph).largest())
    lo = max(2, largest)
    det = determining_number(graph)
    hi, witness = det.value + 1, coloring_from_determining_set(graph, det.witness)
    for d in range(lo, hi):
        coloring, exhaustive = _distinguishing_with(graph, d, budget)
        if coloring is not None:
            return DistResult(d, d, coloring)
        if not exhaustive:
            return DistResult(d, hi, witness)
    return DistResult(hi, hi, witness)


def _distinguishing_with_isolated(graph: Graph, isolated: VertexSet, budget: int) -> DistResult:
    """dist(C + mK_1) = max(dist(C), m): isolated vertices need distinct colors, C reuses them"""
    core_vertices = [v for v in graph.vertices() if v not in isolated]
    core = induced_subgraph(graph, core_vertices)
    m = len(isolated)
    det = determining_number(core)
    if m >= det.value + 1:
        core_result = DistResult(det.value + 1, det.value + 1, coloring_from_determining_set(core, det.witness))
        lo = hi = m
    else:
        core_result = distinguishing_number(core, budget)
        lo, hi = max(core_result.lo, m), max(core_result.hi, m)
    colors = [0] * graph.n
    for v, c in zip(core_vertices, core_result.witness.color):
        colors[v] = c
    for c, v in enumerate(sorted(isolated), 1):
        colors[v] = c
    return DistResult(lo, hi, Coloring.of(colors, max(hi, core_result.witness.d)))


def _has_k2_component(graph: Graph) -> bool:
    return any(graph.degree(v) == 1 and graph.degree(next(iter(graph.adj[v]))) == 1 for v in graph.vertices())


def index_undefined(graph: Graph) -> bool:
    return _has_k2_component(graph) or len(isolated_vertices(graph)) >= 2


def _edge_colorings(m: int, d: int) -> Iterator[List[int]]:
    color = [0] * m

    def assign(position: int, used: int):
        if position == m:
            if used == d:
                yield list(color)
            return
        if used + m - position < d:
            return
        for c in range(1, min(d, used + 1) + 1):
            color[position] = c
            yield from assign(position + 1, max(used, c))

    yield from assign(0, 0)


@lru_cache(maxsize=CACHE_SIZE)
def distinguishing_index(graph: Graph, budget: int = DEFAULT_BUDGET) -> IndexResult:
    """Edge analogue of the distinguishing number, automorphisms acting on edges through vertices"""
    if index_undefined(graph):
        return IndexResult(None, None, None, undefined=True)
    edges = list(graph.edges())
    if is_trivial_group(graph):
        return IndexResult(1, 1, tuple((u, v, 1) for u, v in edges))
    m = len(edges)
    hi_witness = tuple((u, v, c) for c, (u, v) in enumerate(edges, 1))
    for d in range(2, m):
        if d ** m > budget:
            logger.info(f"dist'({graph}): {d}^{m} edge colorings exceed budget {budget}")
            return IndexResult(d, m, hi_witness)
        for colors in _edge_colorings(m, d):
            edge_coloring = dict(zip(edges, colors))
            if is_distinguishing_edge_coloring(graph, edge_coloring):
                return IndexResult(d, d, tuple((u, v, c) for (u, v), c in edge_coloring.items()))
    return IndexResult(m, m, hi_witness)


def param_report(graph: Graph, want=ALL_PARAMS, budget: int = DEFAULT_BUDGET) -> ParamReport:
    report = ParamReport(graph, budget=budget)
    if 'det' in want:
        report.det = determining_number(graph)
    if 'dist' in want:
        report.dist = distinguishing_number(graph, budget)
    if 'rho' in want:
        report.rho = cost_2_distinguishing(graph, budget)
    if 'dist_prime' in want:
        report.dist_prime = distinguishing_index(graph, budget)
    if report.det is not None and report.dist is not None and report.dist.exact:
        assert report.dist.value <= report.det.value + 1, f"dist > det + 1 on {graph}"
    return report


def minimum_determining_sets(graph: Graph) -> List[VertexSet]:
    """Every determining set of minimum size, in lexicographic order"""
    k = determining_number(graph).value
    return [frozenset(s) for s in combinations(graph.vertices(), k) if is_determining_set(graph, s)]
