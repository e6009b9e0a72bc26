import logging

from ..graph import Graph, induced_subgraph, isolated_vertices
from ..harness import Claim, Observation, generalized, sharpness
from ..mycielskian import pendant_vertices, root_component
from ..params import determining_number, is_determining_set, minimum_determining_sets
from ..twins import has_twins, image_of_set, is_twin_free, lift_determining_set, minimum_twin_cover, quotient_graph
from ..utils import registry

logger = logging.getLogger(__name__)


def det(graph: Graph) -> int:
    return determining_number(graph).value


def is_k1(graph: Graph) -> bool:
    return graph.n == 1


def is_k2(graph: Graph) -> bool:
    return graph.n == 2 and graph.edge_count == 1


def has_isolated(graph: Graph) -> bool:
    return bool(isolated_vertices(graph))


def det_mu(instance) -> Claim:
    """Claim skeleton: det(mu_t(G)) with the witness attached, expected filled in by the caller"""
    result = determining_number(generalized(instance.graph, instance.t).graph)
    return Claim('det(mu_t(G))', result.value, None, witness=result.witness)


def expect(claim: Claim, value: int, relation: str = '==') -> Claim:
    claim.expected = value
    claim.relation = relation
    return claim


@registry.theorem(
    'T-det-main',
    "det(mu_t(G)) = t|T| + det(G) for G without isolated vertices; det(mu_t(K2)) = 2",
    hypothesis=lambda i: not has_isolated(i.graph),
)
def check_det_main(instance):
    graph, t = instance.graph, instance.t
    if is_k2(graph):
        yield Claim('det(K2)', det(graph), 1)
        yield expect(det_mu(instance), 2)
    else:
        yield expect(det_mu(instance), t * len(minimum_twin_cover(graph)) + det(graph))


@registry.theorem(
    'L-pendant-det',
    "S + {x_2..x_l} is a minimum determining set of the root component C, S minimum with S + {w} determining for mu_t(H)",
    hypothesis=lambda i: has_isolated(i.graph) and i.graph.edge_count > 0,
)
def check_pendant_det(instance):
    graph, t = instance.graph, instance.t
    isolated = sorted(isolated_vertices(graph))
    core = [v for v in graph.vertices() if v not in isolated]
    core_myc = generalized(induced_subgraph(graph, core), t)
    with_root = determining_number(core_myc.graph, frozenset({core_myc.root}))
    chosen = with_root.witness - {core_myc.root}

    myc = generalized(graph, t)
    component = root_component(myc)

    def lift(v: int) -> int:
        if v == core_myc.root:
            return myc.root
        level, j = divmod(v, len(core))
        return level * graph.n + core[j]

    pendants = [component.index_of(p) for p in pendant_vertices(myc)]
    witness = frozenset(component.index_of(lift(v)) for v in chosen) | frozenset(pendants[1:])
    yield Claim('det(C)', det(component.graph), len(chosen) + len(isolated) - 1, witness=witness)
    yield Claim('S + {x_2..x_l} determining for C', is_determining_set(component.graph, witness), True, witness=witness)


@registry.theorem(
    'T-twinfree-det',
    "Every minimum determining set of a twin-free G without isolated vertices is one of mu_t(G); det(mu_t(G)) = det(G)",
    hypothesis=lambda i: is_twin_free(i.graph) and not has_isolated(i.graph),
)
def check_twinfree_det(instance):
    graph, t = instance.graph, instance.t
    if is_k2(graph):
        yield expect(det_mu(instance), 2)
        return
    yield expect(det_mu(instance), det(graph))
    myc = generalized(graph, t)
    lost = [s for s in minimum_determining_sets(graph) if not is_determining_set(myc.graph, s)]
    yield Claim('minimum determining sets of G not determining in mu_t(G)', len(lost), 0, witness=lost[0] if lost else None)


@registry.theorem(
    'T-twinfree-iso',
    "det(mu_t(G)) = det(G) + t - 1 for twin-free G = H + K1; det(mu_t(K1)) = t",
    hypothesis=lambda i: is_twin_free(i.graph) and has_isolated(i.graph),
)
def check_twinfree_iso(instance):
    graph, t = instance.graph, instance.t
    if is_k1(graph):
        yield expect(det_mu(instance), t)
    else:
        yield expect(det_mu(instance), det(graph) + t - 1)


@registry.theorem(
    'C-two-behaviors',
    "For twin-free G other than K1, K2: det(mu_t(G)) is det(G) without an isolated vertex, det(G) + t - 1 otherwise",
    hypothesis=lambda i: is_twin_free(i.graph) and not is_k1(i.graph) and not is_k2(i.graph),
)
def check_two_behaviors(instance):
    graph, t = instance.graph, instance.t
    extra = t - 1 if has_isolated(graph) else 0
    yield expect(det_mu(instance), det(graph) + extra)


@registry.theorem(
    'T-twin-det',
    "det(mu_t(G)) = t|T| + det(G) for G with twins and no isolated vertices",
    hypothesis=lambda i: has_twins(i.graph) and not has_isolated(i.graph),
)
def check_twin_det(instance):
    graph, t = instance.graph, instance.t
    yield expect(det_mu(instance), t * len(minimum_twin_cover(graph)) + det(graph))


@registry.theorem(
    'T-twin-iso',
    "det(mu_t(G)) = t|T| + det(G) + t - 1 for G with twins and isolated vertices",
    hypothesis=lambda i: has_twins(i.graph) and has_isolated(i.graph),
)
def check_twin_iso(instance):
    graph, t = instance.graph, instance.t
    yield expect(det_mu(instance), t * len(minimum_twin_cover(graph)) + det(graph) + t - 1)


def cover_is_determining(graph: Graph) -> bool:
    return is_determining_set(graph, minimum_twin_cover(graph).members)


@registry.theorem(
    'C-cover-is-det',
    "det(mu_t(G)) = (t+1)det(G) + t - 1 when G has isolated vertices, G != G~ and a minimum twin cover is determining",
    hypothesis=lambda i: has_twins(i.graph) and has_isolated(i.graph) and cover_is_determining(i.graph),
)
def check_cover_is_det(instance):
    graph, t = instance.graph, instance.t
    yield expect(det_mu(instance), (t + 1) * det(graph) + t - 1)


ISO_LOWER = 'det(mu_t(G)) lower bound'
ISO_UPPER = 'det(mu_t(G)) upper bound'


def iso_bounds_sharp(theorem, verdicts):
    return sharpness(theorem, verdicts, (ISO_LOWER, ISO_UPPER))


@registry.theorem(
    'C-iso-bounds',
    "(t+1)|T| + t - 1 <= det(mu_t(G)) <= det(G~) + (t+1)|T| + t - 1 for G != G~ with isolated vertices; both sharp",
    hypothesis=lambda i: has_twins(i.graph) and has_isolated(i.graph),
    finalize=iso_bounds_sharp,
)
def check_iso_bounds(instance):
    graph, t = instance.graph, instance.t
    base = (t + 1) * len(minimum_twin_cover(graph)) + t - 1
    value = det_mu(instance)
    yield Claim(ISO_LOWER, value.computed, base, '>=', witness=value.witness)
    yield Claim(ISO_UPPER, value.computed, det(quotient_graph(graph).graph) + base, '<=')


@registry.theorem(
    'T-combined',
    "det(mu_t(G)) = t|T| + det(G) + t - 1 for any G with isolated vertices other than K1; det(mu_t(K1)) = t",
    hypothesis=lambda i: has_isolated(i.graph),
)
def check_combined(instance):
    graph, t = instance.graph, instance.t
    if is_k1(graph):
        yield Claim('det(K1)', det(graph), 0)
        yield expect(det_mu(instance), t)
        return
    cover = minimum_twin_cover(graph)
    yield expect(det_mu(instance), t * len(cover) + det(graph) + t - 1)
    quotient = quotient_graph(graph)
    chosen = determining_number(quotient.graph, image_of_set(quotient, cover.members)).witness
    lifted = lift_determining_set(graph, chosen, cover)
    extra = lifted - cover.members
    yield Claim('|R|', len(extra), det(quotient.graph), '<=', witness=extra)
    yield Observation('R', sorted(extra))
