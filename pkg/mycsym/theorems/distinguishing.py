import logging

from ..graph import Graph, isolated_vertices
from ..harness import Claim, Instance, Observation, as_value, generalized
from ..mycielskian import classical_mycielskian, mycielskian
from ..params import (
    BUDGET_EXCEEDED, EXACT, RhoResult, cost_2_distinguishing, determining_number, distinguishing_index, distinguishing_number,
    index_undefined, is_determining_set, is_distinguishing_coloring,
)
from ..search import Coloring, is_trivial_group
from ..twins import is_twin_free
from ..utils import registry

logger = logging.getLogger(__name__)

INDEX_MAX_EDGES = 16


def det(graph: Graph) -> int:
    return determining_number(graph).value


def log_ceiling(k: int) -> int:
    """ceil(log2(k + 1))"""
    return k.bit_length()


def rho_value(result: RhoResult):
    if result.status == EXACT:
        return result.value
    if result.status == BUDGET_EXCEEDED:
        return None
    return result.status


def dist_claim(graph: Graph, expected: int, budget: int, quantity: str = 'dist(mu_t(G))', relation: str = '==') -> Claim:
    result = distinguishing_number(graph, budget)
    return Claim(quantity, as_value(result), expected, relation, witness=result.witness)


def rho_claim(graph: Graph, expected: int, budget: int, relation: str = '==') -> Claim:
    result = cost_2_distinguishing(graph, budget)
    return Claim('rho(mu_t(G))', rho_value(result), expected, relation, witness=result.witness)


def twin_free_without_isolated(graph: Graph) -> bool:
    return is_twin_free(graph) and not isolated_vertices(graph)


@registry.theorem(
    'T-dist-mu',
    "dist(mu_t(G)) = tl when tl > dist(G), otherwise dist(mu_t(G)) <= dist(G); G != K1, K2 with l isolated vertices",
    hypothesis=lambda i: i.graph.n != 1 and not (i.graph.n == 2 and i.graph.edge_count == 1),
)
def check_dist_mu(instance):
    graph, t = instance.graph, instance.t
    ell = len(isolated_vertices(graph))
    base = distinguishing_number(graph, instance.budget)
    myc = generalized(graph, t).graph
    if not base.exact:
        yield Claim('dist(mu_t(G))', None, None, note=f'dist(G) only bounded: [{base.lo}, {base.hi}]')
        return
    if t * ell > base.value:
        yield dist_claim(myc, t * ell, instance.budget)
        return
    claim = dist_claim(myc, base.value, instance.budget, relation='<=')
    yield claim
    if isinstance(claim.computed, int) and claim.computed < base.value:
        yield Observation('dist(mu_t(G)) < dist(G)', [claim.computed, base.value])


@registry.theorem(
    'T-twinfree-package',
    "dist(mu_t(G)) = 2, det(mu_t(G)) = det(G), rho(mu_t(G)) = det(G) for twin-free G without isolated vertices, "
    "det(G) >= 2 and t >= det(G) - 1",
    hypothesis=lambda i: twin_free_without_isolated(i.graph) and det(i.graph) >= 2 and i.t >= det(i.graph) - 1,
)
def check_twinfree_package(instance):
    graph, t = instance.graph, instance.t
    myc = generalized(graph, t).graph
    k = det(graph)
    yield dist_claim(myc, 2, instance.budget)
    yield Claim('det(mu_t(G))', det(myc), k)
    yield rho_claim(myc, k, instance.budget)


@registry.theorem(
    'T-rho-log',
    "dist(mu_t(G)) = 2 and rho(mu_t(G)) <= (k+1)ceil(log2(k+1))/2 for twin-free G without isolated vertices, "
    "det(G) = k >= 2, t >= ceil(log2(k+1)) - 1; rho(mu_t(G)) = k once t >= k - 1",
    hypothesis=lambda i: (
        twin_free_without_isolated(i.graph) and det(i.graph) >= 2 and i.t >= log_ceiling(det(i.graph)) - 1
    ),
)
def check_rho_log(instance):
    graph, t = instance.graph, instance.t
    myc = generalized(graph, t).graph
    k = det(graph)
    yield dist_claim(myc, 2, instance.budget)
    yield rho_claim(myc, (k + 1) * log_ceiling(k) // 2, instance.budget, relation='<=')
    if t >= k - 1:
        yield rho_claim(myc, k, instance.budget)


@registry.theorem(
    'T-dist-max2t',
    "dist(mu_t(G)) = max(2, t) for twin-free G = H + K1 with det(G) = k >= 1 and t >= ceil(log2(k+1)) - 1; "
    "rho(mu_t(G)) = k + t - 1 for t = 1, 2 with t >= k - 1",
    hypothesis=lambda i: (
        is_twin_free(i.graph) and isolated_vertices(i.graph) and i.graph.n > 1
        and det(i.graph) >= 1 and i.t >= log_ceiling(det(i.graph)) - 1
    ),
)
def check_dist_max2t(instance):
    graph, t = instance.graph, instance.t
    myc = generalized(graph, t).graph
    k = det(graph)
    yield dist_claim(myc, max(2, t), instance.budget)
    if t in (1, 2) and t >= k - 1:
        yield rho_claim(myc, k + t - 1, instance.budget)
    else:
        yield Observation('rho(mu_t(G))', cost_2_distinguishing(myc, instance.budget).to_dict())


def classical_instances(spec, corpus):
    return [Instance(classical_mycielskian(k).graph, label=f'M{k}') for k in (2, 3)]


@registry.theorem(
    'T-classical-dist',
    "dist(M_k) = 2 for k >= 2",
    per_t=False,
    instances=classical_instances,
)
def check_classical_dist(instance):
    yield Claim('Aut(M_k) nontrivial', not is_trivial_group(instance.graph), True)
    yield dist_claim(instance.graph, 2, instance.budget, quantity='dist(M_k)')


@registry.theorem(
    'I-global',
    "dist <= det + 1 and, when 2-distinguishable, det <= rho on every mu_t(G); witnesses verify",
)
def check_global(instance):
    myc = generalized(instance.graph, instance.t).graph
    det_result = determining_number(myc)
    dist_result = distinguishing_number(myc, instance.budget)
    rho_result = cost_2_distinguishing(myc, instance.budget)
    yield Claim('dist(mu_t(G))', as_value(dist_result), det_result.value + 1, '<=', witness=dist_result.witness)
    valid = is_determining_set(myc, det_result.witness) and is_distinguishing_coloring(myc, dist_result.witness)
    if rho_result.exact:
        yield Claim('rho(mu_t(G))', rho_result.value, det_result.value, '>=', witness=rho_result.witness)
        rest = frozenset(myc.vertices()) - rho_result.witness
        valid = valid and is_distinguishing_coloring(myc, Coloring.from_class(myc.n, rho_result.witness))
        valid = valid and is_determining_set(myc, rho_result.witness) and is_determining_set(myc, rest)
    elif rho_result.status == BUDGET_EXCEEDED:
        yield Claim('rho(mu_t(G))', None, det_result.value, '>=', note='budget exceeded')
    else:
        yield Observation('rho(mu_t(G))', rho_result.status)
    yield Claim('witnesses verify', valid, True)


@registry.theorem(
    'T-index-mu',
    "dist'(mu(G)) <= dist'(G) + 1 for twin-free G with at least three vertices, no K2 component and at most one K1",
    per_t=False,
    hypothesis=lambda i: (
        is_twin_free(i.graph) and i.graph.n >= 3 and not index_undefined(i.graph)
        and 3 * i.graph.edge_count + i.graph.n <= INDEX_MAX_EDGES
    ),
)
def check_index_mu(instance):
    base = distinguishing_index(instance.graph, instance.budget)
    if not base.exact:
        yield Claim("dist'(mu(G))", None, None, note=f"dist'(G) only bounded: [{base.lo}, {base.hi}]")
        return
    result = distinguishing_index(mycielskian(instance.graph).graph, instance.budget)
    yield Claim("dist'(mu(G))", as_value(result), base.value + 1, '<=', witness=result.witness)
