"""Theorem verification: runs registered checks over corpus instances and turns their claims into verdicts."""
import asyncio
import importlib
import json
import logging
import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .corpus import CorpusSpec, generate_corpus
from .graph import GRAPH6_MAX_N, Graph, encode_graph6
from .mycielskian import MycGraph, generalized_mycielskian
from .search import Coloring
from .utils import CACHE_SIZE, DEFAULT_BUDGET, MycsymError, Theorem, registry, sync_to_async

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
SKIPPED = 'skipped'

RELATIONS = {'==': operator.eq, '<=': operator.le, '>=': operator.ge}


@dataclass(frozen=True)
class Bounds:
    lo: int
    hi: int


Value = Union[int, bool, Bounds, None]


@dataclass(frozen=True)
class Instance:
    graph: Graph
    t: Optional[int] = None
    label: str = ''
    budget: int = field(default=DEFAULT_BUDGET, compare=False)

    @property
    def graph6(self) -> Optional[str]:
        return encode_graph6(self.graph) if self.graph.n <= GRAPH6_MAX_N else None

    def to_dict(self) -> Dict:
        result = dict(graph6=self.graph6, n=self.graph.n, t=self.t)
        if self.label:
            result['label'] = self.label
        return result

    def __str__(self):
        name = self.label or self.graph6
        return f'{name}' if self.t is None else f'{name}, t={self.t}'


@dataclass
class Claim:
    """`computed relation expected` for one quantity of one instance"""
    quantity: str
    computed: Value
    expected: Value
    relation: str = '=='
    witness: Any = None
    note: str = ''


@dataclass
class Observation:
    quantity: str
    value: Any
    note: str = ''


@dataclass
class TheoremVerdict:
    theorem_id: str
    claim: str
    instance: Dict
    quantity: str
    expected: Any
    relation: str
    computed: Any
    status: str
    witness: Any = None
    note: str = ''

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict:
        return {
            'theorem_id': self.theorem_id, 'claim': self.claim, 'instance': self.instance, 'quantity': self.quantity,
            'expected': jsonable(self.expected), 'relation': self.relation, 'computed': jsonable(self.computed),
            'pass': self.passed, 'status': self.status, 'witness': jsonable(self.witness), 'note': self.note,
        }


@dataclass
class ObservationRecord:
    theorem_id: str
    instance: Dict
    quantity: str
    value: Any
    note: str = ''

    def to_dict(self) -> Dict:
        return dict(
            theorem_id=self.theorem_id, instance=self.instance, quantity=self.quantity,
            value=jsonable(self.value), note=self.note,
        )


@dataclass
class VerificationResult:
    theorem_ids: List[str]
    spec: CorpusSpec
    perturb: int = 0
    instances: int = 0
    verdicts: List[TheoremVerdict] = field(default_factory=list)
    observations: List[ObservationRecord] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for verdict in self.verdicts if verdict.status == FAIL)

    def count(self, status: str) -> int:
        return sum(1 for verdict in self.verdicts if verdict.status == status)

    @property
    def summary_line(self) -> str:
        return f'{self.instances} instances, {self.failures} failures'

    @property
    def exit_status(self) -> int:
        return 1 if self.failures else 0

    def to_dict(self) -> Dict:
        return {
            'schema_version': SCHEMA_VERSION,
            'spec': dict(self.spec.to_dict(), theorems=self.theorem_ids, perturb=self.perturb),
            'summary': {
                'line': self.summary_line, 'instances': self.instances, 'verdicts': len(self.verdicts),
                'failures': self.failures, 'inconclusive': self.count(INCONCLUSIVE), 'skipped': self.count(SKIPPED),
            },
            'verdicts': [verdict.to_dict() for verdict in self.verdicts],
            'observations': [observation.to_dict() for observation in self.observations],
        }


def jsonable(value):
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, Coloring):
        return list(value.color)
    if isinstance(value, Bounds):
        return dict(lo=value.lo, hi=value.hi)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return value


@lru_cache(maxsize=CACHE_SIZE)
def generalized(graph: Graph, t: int) -> MycGraph:
    return generalized_mycielskian(graph, t)


def load_theorems():
    """Import every module of mycsym.theorems so their registry entries exist"""
    from . import theorems
    for name in theorems.__all__:
        importlib.import_module(f'{theorems.__name__}.{name}')


def perturbed(expected: Value, relation: str, k: int) -> Value:
    """Tighten an expected value by k: equalities shift, upper bounds drop, lower bounds rise"""
    if not k or isinstance(expected, bool) or not isinstance(expected, int):
        return expected
    return expected - k if relation == '<=' else expected + k


def judge(computed: Value, expected: Value, relation: str) -> str:
    if computed is None or expected is None:
        return SKIPPED
    if isinstance(computed, str):
        # a marker such as not-2-distinguishable where a number was expected
        return FAIL
    if isinstance(computed, Bounds):
        if relation == '<=':
            return PASS if computed.hi <= expected else FAIL if computed.lo > expected else SKIPPED
        if relation == '>=':
            return PASS if computed.lo >= expected else FAIL if computed.hi < expected else SKIPPED
        if computed.lo == computed.hi:
            return judge(computed.lo, expected, relation)
        return FAIL if not computed.lo <= expected <= computed.hi else SKIPPED
    return PASS if RELATIONS[relation](computed, expected) else FAIL


def make_verdict(theorem: Theorem, instance: Optional[Instance], claim: Claim, perturb: int = 0) -> TheoremVerdict:
    expected = perturbed(claim.expected, claim.relation, perturb)
    status = judge(claim.computed, expected, claim.relation)
    verdict = TheoremVerdict(
        theorem_id=theorem.id, claim=theorem.claim, instance=instance.to_dict() if instance else None,
        quantity=claim.quantity, expected=expected, relation=claim.relation, computed=claim.computed,
        status=status, witness=claim.witness, note=claim.note,
    )
    if status == FAIL:
        logger.info(f"{theorem.id} [{instance}]: {claim.quantity} = {claim.computed}, expected {claim.relation} {expected}")
    elif status == SKIPPED:
        logger.warning(f"{theorem.id} [{instance}]: {claim.quantity} undecided within budget")
    return verdict


def check_instance(theorem_id: str, instance: Instance, perturb: int = 0) -> Tuple[List[TheoremVerdict], List[ObservationRecord]]:
    load_theorems()
    theorem = registry.get(theorem_id)
    verdicts, observations = [], []
    try:
        for item in theorem.check(instance):
            if isinstance(item, Observation):
                observations.append(ObservationRecord(theorem.id, instance.to_dict(), item.quantity, item.value, item.note))
            else:
                verdicts.append(make_verdict(theorem, instance, item, perturb))
    except Exception as exc:
        logger.exception(f"Unexpected exception checking {theorem_id} on {instance}: {exc!r}")
        raise
    return verdicts, observations


def sharpness(theorem: Theorem, verdicts: Sequence[TheoremVerdict], quantities: Iterable[str]) -> List[TheoremVerdict]:
    """One existential verdict per bound: some instance attains it"""
    result = []
    for quantity in quantities:
        attaining = [
            v for v in verdicts
            if v.quantity == quantity and v.status == PASS and isinstance(v.computed, int) and v.computed == v.expected
        ]
        witness = attaining[0].instance if attaining else None
        status = PASS if attaining else INCONCLUSIVE
        if not attaining:
            logger.warning(f"{theorem.id}: no instance attains the bound '{quantity}'; the corpus may be too small")
        result.append(TheoremVerdict(
            theorem_id=theorem.id, claim=theorem.claim, instance=None, quantity=f'sharpness of {quantity}',
            expected=True, relation='==', computed=bool(attaining), status=status, witness=witness,
            note=f'{len(attaining)} attaining instances',
        ))
    return result


def instances_for(theorem: Theorem, corpus: List[Graph], spec: CorpusSpec) -> List[Instance]:
    if theorem.instances is not None:
        candidates = theorem.instances(spec, corpus)
    elif theorem.per_t:
        candidates = [Instance(graph, t) for graph in corpus for t in spec.t_values]
    else:
        candidates = [Instance(graph) for graph in corpus]
    return [replace(instance, budget=spec.budget) for instance in candidates if theorem.applies(instance)]


async def _gather(jobs, perturb: int, workers: int):
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return await asyncio.gather(*(
            sync_to_async(executor, check_instance, theorem_id, instance, perturb) for theorem_id, instance in jobs
        ))


def verify(theorem_ids: Iterable[str], spec: CorpusSpec, perturb: int = 0, workers: int = None) -> VerificationResult:
    load_theorems()
    theorems = registry.select(theorem_ids)
    corpus = generate_corpus(spec)
    jobs = []
    for theorem in theorems:
        instances = instances_for(theorem, corpus, spec)
        logger.info(f"{theorem.id}: {len(instances)} instances")
        jobs.extend((theorem.id, instance) for instance in instances)
    workers = workers or spec.workers
    if workers > 1 and len(jobs) > 1:
        outcomes = asyncio.run(_gather(jobs, perturb, workers))
    else:
        outcomes = [check_instance(theorem_id, instance, perturb) for theorem_id, instance in jobs]

    result = VerificationResult([theorem.id for theorem in theorems], spec, perturb, instances=len(jobs))
    for theorem in theorems:
        verdicts = [v for (theorem_id, _), (vs, _) in zip(jobs, outcomes) if theorem_id == theorem.id for v in vs]
        if theorem.finalize is not None:
            verdicts += theorem.finalize(theorem, verdicts)
        result.verdicts.extend(verdicts)
        result.observations.extend(
            o for (theorem_id, _), (_, os) in zip(jobs, outcomes) if theorem_id == theorem.id for o in os
        )
    if not jobs:
        logger.warning("0 instances: no corpus graph meets the hypotheses of the selected theorems")
    logger.info(result.summary_line)
    return result


def verify_theorem(id: str, spec: CorpusSpec, perturb: int = 0, workers: int = None) -> List[TheoremVerdict]:
    return verify([id], spec, perturb, workers).verdicts


def format_table(result: VerificationResult) -> str:
    header = ('theorem', 'instance', 't', 'quantity', 'rel', 'expected', 'computed', 'status')
    rows = [header]
    for v in result.verdicts:
        instance = v.instance or {}
        rows.append((
            v.theorem_id, str(instance.get('label') or instance.get('graph6') or '-'), str(instance.get('t') or '-'),
            v.quantity, v.relation, _cell(v.expected), _cell(v.computed), v.status,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    lines.append(result.summary_line)
    return '\n'.join(lines)


def _cell(value) -> str:
    if isinstance(value, Bounds):
        return f'[{value.lo}, {value.hi}]'
    return str(value)


def report(result: VerificationResult, format: str = 'json') -> Tuple[str, int]:
    """Rendered report and the exit status it implies"""
    if format == 'json':
        text = json.dumps(result.to_dict(), sort_keys=True, indent=2)
    elif format == 'table':
        text = format_table(result)
    else:
        raise MycsymError(f"Unknown report format {format!r}; use json or table")
    return text, result.exit_status


def as_value(result) -> Value:
    """Exact value of a parameter result, or its bounds"""
    if getattr(result, 'undefined', False):
        return None
    return result.value if result.exact else Bounds(result.lo, result.hi)
