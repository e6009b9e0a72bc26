import logging

from ..graph import complete_graph, cycle_graph, disjoint_union, empty_graph, is_star, isolated_vertices, star_graph
from ..harness import Claim, Instance, Observation, generalized
from ..mycielskian import check_degree_laws, check_level_structure, mycielskian
from ..search import are_isomorphic, enumerate_automorphisms
from ..utils import registry

logger = logging.getLogger(__name__)

LEVELS_AUT_CAP = 10 ** 4
LEVELS_MAX_N = 5


def construction_instances(spec, corpus):
    instances = [Instance(complete_graph(2), t, label='K2') for t in range(1, 6)]
    instances += [Instance(complete_graph(1), t, label='K1') for t in range(1, 6)]
    instances += [Instance(empty_graph(ell), t, label=f'{ell}K1') for ell in range(2, 5) for t in range(1, 4)]
    instances += [Instance(graph, 1) for graph in corpus]
    return instances


@registry.theorem(
    'P-construction',
    "mu_t(K2) = C_{2t+3}, mu_t(lK1) = K_{1,l} + tlK1, mu(G) = mu_1(G)",
    instances=construction_instances,
)
def check_construction(instance):
    graph, t = instance.graph, instance.t
    myc = generalized(graph, t)
    yield Claim('|V(mu_t(G))|', myc.graph.n, graph.n * (t + 1) + 1)
    if graph.n == 2 and graph.edge_count == 1:
        yield Claim('mu_t(K2) ~ C_{2t+3}', are_isomorphic(myc.graph, cycle_graph(2 * t + 3)), True)
    if graph.edge_count == 0:
        ell = graph.n
        expected = disjoint_union(star_graph(ell), empty_graph(t * ell))
        yield Claim('mu_t(lK1) ~ K_{1,l} + tlK1', are_isomorphic(myc.graph, expected), True)
    if t == 1:
        yield Claim('mu(G) = mu_1(G)', mycielskian(graph).graph == myc.graph, True)


@registry.theorem(
    'P-degree-laws',
    "deg(u^s) = 2 deg(u) below the top level, deg(u^t) = deg(u) + 1, deg(w) = |V(G)|, G induced on level 0",
)
def check_degree_laws_hold(instance):
    myc = generalized(instance.graph, instance.t)
    violations = check_degree_laws(myc)
    yield Claim('degree-law violations', len(violations), 0, note='; '.join(violations[:3]))
    ell = len(isolated_vertices(instance.graph))
    yield Claim('isolated vertices of mu_t(G)', len(isolated_vertices(myc.graph)), instance.t * ell)


@registry.theorem(
    'L-levels',
    "Automorphisms of mu_t(G) fix w, preserve levels and restrict to Aut(G) when G is not a star and has no isolated vertex",
    hypothesis=lambda i: i.graph.n <= LEVELS_MAX_N and not is_star(i.graph) and not isolated_vertices(i.graph),
)
def check_levels(instance):
    myc = generalized(instance.graph, instance.t)
    enumeration = enumerate_automorphisms(myc.graph, cap=LEVELS_AUT_CAP)
    broken = [perm for perm in enumeration.perms if check_level_structure(myc, perm)]
    yield Claim(
        'automorphisms breaking the level structure', len(broken), 0,
        witness=broken[0] if broken else None,
        note='; '.join(check_level_structure(myc, broken[0])) if broken else '',
    )
    yield Observation('|Aut(mu_t(G))| enumerated', len(enumeration), note='saturated' if enumeration.saturated else '')
