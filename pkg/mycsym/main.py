import argparse
import json
import logging
import os
import sys
from typing import Dict, List

import coloredlogs

from .corpus import CorpusSpec, read_config
from .graph import GRAPH6_MAX_N, Graph, encode_graph6, read_graphs
from .harness import load_theorems, report, verify
from .mycielskian import MycGraph, generalized_mycielskian
from .params import ALL_PARAMS, param_report
from .twins import quotient_graph
from .utils import ConstructionError, MycsymError, Settings, registry

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)-15s %(levelname)-5s[%(name)-30s:%(lineno)d] %(message)s'


def setup_logging(level=logging.INFO):
    coloredlogs.install(level=level, fmt=LOG_FORMAT, stream=sys.stderr)
    for logger_level, name in logging._levelToName.items():
        for logger_name in os.getenv(f'LOGGERS_{name}', '').split(','):
            if logger_name:
                logging.getLogger(logger_name).setLevel(logger_level)


def int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def read_graph(path) -> Graph:
    graphs = read_graphs(path)
    if len(graphs) > 1:
        logger.warning(f"{path} holds {len(graphs)} graphs; using the first")
    return graphs[0]


def format_graph(graph: Graph) -> str:
    """graph6 when it fits, the edge-list format otherwise"""
    if graph.n <= GRAPH6_MAX_N:
        return encode_graph6(graph)
    return '\n'.join([str(graph.n)] + [f'{u} {v}' for u, v in graph.edges()])


def construct(args) -> int:
    if args.iterate < 1:
        raise ConstructionError(f"Number of iterations must be at least 1, got {args.iterate}")
    graph = read_graph(args.file)
    myc: MycGraph = generalized_mycielskian(graph, args.t)
    for _ in range(args.iterate - 1):
        myc = generalized_mycielskian(myc.graph, args.t)
    print(format_graph(myc.graph))
    if args.roles:
        print(json.dumps(myc.to_json(), sort_keys=True))
    return 0


def params(args) -> int:
    graph = read_graph(args.file)
    want = [name for name in ALL_PARAMS if getattr(args, name)] or list(ALL_PARAMS)
    budget = args.budget or Settings.from_env().budget
    print(json.dumps(param_report(graph, want, budget).to_dict(), sort_keys=True, indent=2))
    return 0


def quotient(args) -> int:
    result = quotient_graph(read_graph(args.file))
    print(format_graph(result.graph))
    classes = dict(
        class_of=list(result.class_of), rep_of=list(result.rep_of),
        classes=[list(members) for members in result.partition.classes],
    )
    print(json.dumps(classes, sort_keys=True))
    return 0


def corpus_spec(args) -> CorpusSpec:
    """Flags override the config file, which overrides the environment"""
    settings = Settings.from_env()
    data: Dict = dict(budget=settings.budget, workers=settings.workers, seeds=True)
    if args.config:
        data.update(read_config(args.config))
    overrides = dict(
        n_max=args.nmax, t_values=args.t, corpus=args.corpus, workers=args.workers, budget=args.budget,
        filters=args.filter, seeds=False if args.no_seeds else None,
    )
    data.update({key: value for key, value in overrides.items() if value is not None})
    return CorpusSpec.from_dict(data)


def verify_command(args) -> int:
    spec = corpus_spec(args)
    result = verify(args.theorem.split(','), spec, perturb=args.perturb)
    text, status = report(result, args.format)
    print(text)
    return status


def list_theorems(args) -> int:
    load_theorems()
    width = max(len(id) for id in registry.ids())
    for theorem in registry.theorems.values():
        print(f'{theorem.id.ljust(width)}  {theorem.claim}')
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='mycsym', description="Symmetry parameters of generalized Mycielskian graphs")
    parser.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    parser.add_argument('-q', '--quiet', action='store_true', help="warnings and errors only")
    commands = parser.add_subparsers(dest='command', required=True)

    sub = commands.add_parser('construct', help="build mu_t(G)")
    sub.add_argument('--t', type=int, default=1)
    sub.add_argument('--iterate', type=int, default=1, help="apply the construction K times")
    sub.add_argument('--roles', action='store_true', help="also print the JSON role map")
    sub.add_argument('file')
    sub.set_defaults(func=construct)

    sub = commands.add_parser('params', help="det, dist, rho and dist' with witnesses")
    sub.add_argument('--det', action='store_true')
    sub.add_argument('--dist', action='store_true')
    sub.add_argument('--rho', action='store_true')
    sub.add_argument('--dist-prime', dest='dist_prime', action='store_true')
    sub.add_argument('--budget', type=int)
    sub.add_argument('file')
    sub.set_defaults(func=params)

    sub = commands.add_parser('quotient', help="twin quotient graph and class map")
    sub.add_argument('file')
    sub.set_defaults(func=quotient)

    sub = commands.add_parser('verify', help="check registered theorems over a corpus")
    sub.add_argument('--theorem', default='all', help="comma-separated ids or 'all'")
    sub.add_argument('--nmax', type=int)
    sub.add_argument('--t', type=int_list)
    sub.add_argument('--corpus', help="graph6 or edge-list file instead of the built-in atlas")
    sub.add_argument('--filter', action='append', help="corpus filter, repeatable")
    sub.add_argument('--no-seeds', dest='no_seeds', action='store_true')
    sub.add_argument('--format', choices=('json', 'table'), default='json')
    sub.add_argument('--workers', type=int)
    sub.add_argument('--budget', type=int)
    sub.add_argument('--config', help="YAML corpus configuration")
    sub.add_argument('--perturb', type=int, default=0, help="tighten every expected value by K")
    sub.set_defaults(func=verify_command)

    sub = commands.add_parser('list', help="registered theorem ids")
    sub.set_defaults(func=list_theorems)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO)
    try:
        return args.func(args)
    except (MycsymError, OSError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return 2


def main():
    sys.exit(run())
