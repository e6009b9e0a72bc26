"""Test corpora: every graph of the networkx atlas up to n_max vertices, or graphs ingested from a file,
narrowed by named filters and optionally extended by hand-picked seed graphs."""
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import yaml

from .graph import (
    Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, from_networkx, is_star, isolated_vertices, read_graphs,
)
from .search import are_isomorphic
from .twins import has_twins, is_twin_free
from .utils import DEFAULT_BUDGET, CorpusError

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7

FILTERS: Dict[str, Callable[[Graph], bool]] = {
    'twin-free': is_twin_free,
    'has-twins': has_twins,
    'has-isolated': lambda g: bool(isolated_vertices(g)),
    'no-isolated': lambda g: not isolated_vertices(g),
    'non-star': lambda g: not is_star(g),
    'not-K1': lambda g: g.n != 1,
    'not-K2': lambda g: not (g.n == 2 and g.edge_count == 1),
    # G differs from its quotient exactly when it has twins
    'not-quotient': has_twins,
}


def quotient_p4_graph() -> Graph:
    """u=0, v=1, w=2 on a path with twins x=3, y=4 hanging off u; its quotient is P4"""
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])


def c4_pendants_graph(k: int) -> Graph:
    """u=0 - v=1, w=2 - z=3 and k mutual twins 4.. adjacent to both v and w; no minimum twin cover is determining"""
    if k < 2:
        raise CorpusError(f"The pendant family needs at least 2 twins, got {k}")
    return Graph.from_edges(4 + k, [(0, 1), (2, 3)] + [(x, y) for x in range(4, 4 + k) for y in (1, 2)])


def k_plus_isolated(k: int, ell: int) -> Graph:
    return disjoint_union(complete_graph(k), empty_graph(ell))


SEEDS: Dict[str, Callable[[], Graph]] = {
    'quotient-p4': quotient_p4_graph,
    'c4-pendants-2': lambda: c4_pendants_graph(2),
    'c4-pendants-3': lambda: c4_pendants_graph(3),
    'K2+2K1': lambda: k_plus_isolated(2, 2),
    'K2+3K1': lambda: k_plus_isolated(2, 3),
    'K3+3K1': lambda: k_plus_isolated(3, 3),
    'C5': lambda: cycle_graph(5),
}


@dataclass
class CorpusSpec:
    n_max: int = 6
    t_values: Tuple[int, ...] = (1, 2)
    filters: Tuple[str, ...] = ()
    corpus: Optional[str] = None
    seeds: bool = False
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def __post_init__(self):
        self.t_values = tuple(self.t_values)
        self.filters = tuple(self.filters)
        if self.n_max < 1:
            raise CorpusError(f"n_max must be at least 1, got {self.n_max}")
        if not self.t_values or any(t < 1 for t in self.t_values):
            raise CorpusError(f"t values must be a nonempty list of integers >= 1, got {list(self.t_values)}")
        unknown = [name for name in self.filters if name not in FILTERS]
        if unknown:
            raise CorpusError(f"Unknown filters {unknown}; known: {', '.join(FILTERS)}")

    @classmethod
    def from_dict(cls, data: Dict) -> 'CorpusSpec':
        known = {'n_max', 't_values', 'filters', 'corpus', 'seeds', 'budget', 'workers'}
        unknown = set(data) - known
        if unknown:
            raise CorpusError(f"Unknown corpus config keys {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_yaml(cls, path) -> 'CorpusSpec':
        return cls.from_dict(read_config(path))

    def to_dict(self) -> Dict:
        result = asdict(self)
        result['t_values'] = list(self.t_values)
        result['filters'] = list(self.filters)
        return result


def read_config(path) -> Dict:
    """Raw mapping holding only the keys the file sets"""
    try:
        data = yaml.safe_load(Path(path).read_text()) or {}
    except yaml.YAMLError as exc:
        raise CorpusError(f"Malformed config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise CorpusError(f"Config {path} must be a mapping, got {type(data).__name__}")
    logger.debug(f"Loaded corpus config from {path}: {data}")
    return data


def atlas_graphs(n_max: int) -> List[Graph]:
    """All graphs on 1..n_max vertices, pairwise non-isomorphic, in atlas order"""
    if n_max > ATLAS_MAX_N:
        raise CorpusError(f"The built-in atlas stops at n={ATLAS_MAX_N}; pass a graph6 corpus file for n_max={n_max}")
    return [from_networkx(g) for g in nx.graph_atlas_g() if 1 <= len(g) <= n_max]


def deduplicate(graphs: List[Graph]) -> List[Graph]:
    """Drop graphs isomorphic to an earlier one, keeping first occurrences in order"""
    buckets: Dict[Tuple, List[Graph]] = {}
    result = []
    for graph in graphs:
        bucket = buckets.setdefault((graph.n, graph.edge_count, graph.degree_sequence()), [])
        if any(are_isomorphic(graph, seen) for seen in bucket):
            continue
        bucket.append(graph)
        result.append(graph)
    if len(result) < len(graphs):
        logger.info(f"Dropped {len(graphs) - len(result)} isomorphic duplicates")
    return result


def load_corpus(path) -> List[Graph]:
    return deduplicate(read_graphs(path))


def seed_graphs() -> List[Graph]:
    return [make() for make in SEEDS.values()]


def apply_filters(graphs: List[Graph], filters) -> List[Graph]:
    predicates = [FILTERS[name] for name in filters]
    return [g for g in graphs if all(predicate(g) for predicate in predicates)]


def generate_corpus(spec: CorpusSpec) -> List[Graph]:
    if spec.corpus:
        graphs = load_corpus(spec.corpus)
        graphs = [g for g in graphs if g.n <= spec.n_max]
    else:
        graphs = atlas_graphs(spec.n_max)
    if spec.seeds:
        graphs = deduplicate(graphs + seed_graphs())
    result = apply_filters(graphs, spec.filters)
    logger.info(f"Corpus: {len(result)} graphs (n_max={spec.n_max}, filters={list(spec.filters)}, seeds={spec.seeds})")
    return result
