import pytest

from mycsym.corpus import CorpusSpec, c4_pendants_graph, k_plus_isolated, quotient_p4_graph
from mycsym.graph import complete_graph, cycle_graph, path_graph
from mycsym.harness import FAIL, PASS, Instance, check_instance, verify
from mycsym.utils import registry

QUICK = CorpusSpec(n_max=4, t_values=(1, 2), budget=2 ** 12)

THEOREMS = [
    'P-construction', 'P-degree-laws', 'L-levels', 'O-twins-lift', 'T-det-main', 'L-pendant-det', 'T-twinfree-det',
    'T-twinfree-iso', 'C-two-behaviors', 'T-twin-det', 'T-twin-iso', 'C-cover-is-det', 'C-iso-bounds', 'C-quotient-det',
    'T-lift-S', 'C-twin-bounds', 'T-combined', 'L-lift-cover', 'L-commutes', 'L-commutes-observed', 'T-dist-mu',
    'T-twinfree-package', 'T-rho-log', 'T-dist-max2t', 'T-classical-dist', 'I-global', 'T-index-mu',
]


@pytest.mark.parametrize('theorem_id', THEOREMS)
def test_no_failures_on_small_graphs(theorem_id):
    result = verify([theorem_id], QUICK)
    failed = [v.to_dict() for v in result.verdicts if v.status == FAIL]
    assert failed == []


def test_every_theorem_is_swept():
    assert sorted(THEOREMS) == sorted(registry.ids())


@pytest.mark.parametrize('theorem_id, instance', [
    ('T-det-main', Instance(complete_graph(2), 2)),
    ('T-det-main', Instance(cycle_graph(4), 2)),
    ('T-twin-iso', Instance(k_plus_isolated(2, 3), 1)),
    ('T-combined', Instance(complete_graph(1), 3)),
    ('T-combined', Instance(k_plus_isolated(3, 3), 2)),
    ('L-pendant-det', Instance(k_plus_isolated(2, 2), 2)),
    ('L-lift-cover', Instance(k_plus_isolated(2, 3), 2)),
    ('T-lift-S', Instance(quotient_p4_graph())),
    ('C-twin-bounds', Instance(c4_pendants_graph(2))),
    ('T-twinfree-det', Instance(path_graph(4), 3)),
    ('T-dist-max2t', Instance(k_plus_isolated(3, 1), 1)),
])
def test_seed_instances(theorem_id, instance):
    verdicts, _ = check_instance(theorem_id, instance)
    assert verdicts
    assert all(v.status == PASS for v in verdicts)


def test_classical_mycielskians_are_2_distinguishable():
    result = verify(['T-classical-dist'], CorpusSpec(n_max=1))
    assert [v.status for v in result.verdicts] == [PASS] * 4
    assert {v.instance['label'] for v in result.verdicts} == {'M2', 'M3'}


def test_observations_are_not_verdicts():
    result = verify(['L-commutes-observed'], CorpusSpec(n_max=3))
    assert result.verdicts == []
    assert result.observations
    assert {o.quantity for o in result.observations} == {'commuting forms'}


@pytest.mark.slow
@pytest.mark.parametrize('theorem_id', THEOREMS)
def test_no_failures_up_to_six_vertices(theorem_id):
    result = verify([theorem_id], CorpusSpec(n_max=6, t_values=(1, 2), seeds=True), workers=4)
    assert result.failures == 0


def test_rho_claim_needs_t_at_least_det_minus_one():
    verdicts, observations = check_instance('T-dist-max2t', Instance(k_plus_isolated(3, 1), 1))
    assert [v.quantity for v in verdicts] == ['dist(mu_t(G))', 'rho(mu_t(G))']
    assert observations == []


@pytest.mark.parametrize('k, t, rho', [(4, 1, 4), (5, 2, 6)])
def test_rho_below_det_range_is_observed(k, t, rho):
    verdicts, observations = check_instance('T-dist-max2t', Instance(k_plus_isolated(k, 1), t))
    assert [v.quantity for v in verdicts] == ['dist(mu_t(G))']
    assert all(v.status == PASS for v in verdicts)
    assert [o.value['value'] for o in observations if o.quantity == 'rho(mu_t(G))'] == [rho]


PERTURBED = CorpusSpec(n_max=4, seeds=True)

# dist'(mu(G)) <= dist'(G) on every graph T-index-mu meets here
UNPERTURBABLE = ('L-commutes-observed', 'T-index-mu')


@pytest.mark.parametrize('theorem_id', [id for id in THEOREMS if id not in UNPERTURBABLE])
def test_perturbation_is_caught(theorem_id):
    result = verify([theorem_id], PERTURBED, perturb=1)
    assert result.failures > 0
    assert result.exit_status == 1


def test_index_bound_has_slack():
    result = verify(['T-index-mu'], PERTURBED, perturb=1)
    assert result.verdicts
    assert result.failures == 0
    assert verify(['L-commutes-observed'], PERTURBED, perturb=1).verdicts == []
