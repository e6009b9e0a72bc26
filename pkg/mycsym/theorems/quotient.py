import logging

from ..graph import Graph, disjoint_union, empty_graph, isolated_vertices
from ..harness import Claim, Observation, generalized, sharpness
from ..params import determining_number, is_determining_set, minimum_determining_sets
from ..search import are_isomorphic
from ..twins import (
    has_twins, image_of_set, is_minimum_twin_cover, level_twin_pair_count, lift_determining_set, lifted_cover,
    lifted_cover_size, minimum_twin_cover, quotient_commutes_check, quotient_graph, twin_pair_count, twins_lift_check,
)
from ..utils import registry

logger = logging.getLogger(__name__)

TWIN_LOWER = 'det(G) lower bound'
TWIN_UPPER = 'det(G) upper bound'


@registry.theorem(
    'O-twins-lift',
    "v_i ~ v_j in G iff u_i^s ~ u_j^s in mu_t(G) for every level s, and twins on one level are twins on all",
)
def check_twins_lift(instance):
    graph, t = instance.graph, instance.t
    yield Claim('twins lift', twins_lift_check(graph, t), True)
    yield Claim('level twin pairs of mu_t(G)', level_twin_pair_count(graph, t), (t + 1) * twin_pair_count(graph))


@registry.theorem(
    'C-quotient-det',
    "If S is a determining set of G then S~ is a determining set of G~",
    per_t=False,
)
def check_quotient_det(instance):
    graph = instance.graph
    quotient = quotient_graph(graph)
    lost = [s for s in minimum_determining_sets(graph) if not is_determining_set(quotient.graph, image_of_set(quotient, s))]
    yield Claim('minimum determining sets whose image is not determining', len(lost), 0, witness=lost[0] if lost else None)


@registry.theorem(
    'T-lift-S',
    "S = T + R is a minimum determining set of G when S~ is minimum among determining sets of G~ containing T~",
    per_t=False,
)
def check_lift(instance):
    graph = instance.graph
    cover = minimum_twin_cover(graph)
    quotient = quotient_graph(graph)
    chosen = determining_number(quotient.graph, image_of_set(quotient, cover.members)).witness
    lifted = lift_determining_set(graph, chosen, cover)
    yield Claim('T + R determining', is_determining_set(graph, lifted), True, witness=lifted)
    yield Claim('|T + R|', len(lifted), determining_number(graph).value, witness=lifted)


def twin_bounds_sharp(theorem, verdicts):
    return sharpness(theorem, verdicts, (TWIN_LOWER, TWIN_UPPER))


@registry.theorem(
    'C-twin-bounds',
    "|T| <= det(G) <= |T| + det(G~), both bounds sharp",
    per_t=False,
    finalize=twin_bounds_sharp,
)
def check_twin_bounds(instance):
    graph = instance.graph
    size = len(minimum_twin_cover(graph))
    value = determining_number(graph)
    yield Claim(TWIN_LOWER, value.value, size, '>=', witness=value.witness)
    yield Claim(TWIN_UPPER, value.value, size + determining_number(quotient_graph(graph).graph).value, '<=')


@registry.theorem(
    'L-lift-cover',
    "T_t, plus t - 1 shadows of the uncovered isolated vertex when there is one, is a minimum twin cover of mu_t(G) "
    "of size (t+1)|T| (+ t - 1)",
)
def check_lift_cover(instance):
    graph, t = instance.graph, instance.t
    cover = minimum_twin_cover(graph)
    lifted = lifted_cover(graph, cover, t)
    extra = t - 1 if isolated_vertices(graph) else 0
    yield Claim('lifted cover is a minimum twin cover', is_minimum_twin_cover(generalized(graph, t).graph, lifted), True)
    yield Claim('|lifted cover|', len(lifted), (t + 1) * len(cover) + extra, witness=lifted)
    yield Claim('|lifted cover| formula', lifted_cover_size(graph, cover, t), len(lifted))


def commutes_applies(instance) -> bool:
    graph = instance.graph
    return not isolated_vertices(graph) or has_twins(graph)


@registry.theorem(
    'L-commutes',
    "mu_t(G~) = (mu_t(G))~ without isolated vertices; mu_t(G~) = (mu_t(G))~ + (t-1)K1 with isolated vertices and G != G~",
    hypothesis=commutes_applies,
)
def check_commutes(instance):
    graph, t = instance.graph, instance.t
    yield Claim('quotient commutes with mu_t', quotient_commutes_check(graph, t), True)
    padding = t - 1 if isolated_vertices(graph) else 0
    left = generalized(quotient_graph(graph).graph, t).graph
    right = quotient_graph(generalized(graph, t).graph).graph
    yield Claim('|V(mu_t(G~))|', left.n, right.n + padding)


def observe_twin_free_isolated(graph: Graph, t: int):
    """Both forms of the commuting identity for a twin-free G with an isolated vertex, which no result covers"""
    left = generalized(quotient_graph(graph).graph, t).graph
    right = quotient_graph(generalized(graph, t).graph).graph
    return dict(plain=are_isomorphic(left, right), padded=are_isomorphic(left, disjoint_union(right, empty_graph(t - 1))))


@registry.theorem(
    'L-commutes-observed',
    "Quotient against mu_t for twin-free G with an isolated vertex (recorded, not asserted)",
    hypothesis=lambda i: not commutes_applies(i),
)
def check_commutes_observed(instance):
    yield Observation('commuting forms', observe_twin_free_isolated(instance.graph, instance.t))
