import json
import logging

import pytest

from mycsym.graph import cycle_graph, parse_graph6
from mycsym.main import build_parser, corpus_spec, run, setup_logging
from mycsym.search import are_isomorphic


def test_construct(write_graph, capsys):
    assert run(['construct', '--t', '2', write_graph('A_\n')]) == 0
    out = capsys.readouterr().out.strip()
    assert are_isomorphic(parse_graph6(out), cycle_graph(7))


def test_construct_roles(write_graph, capsys):
    assert run(['construct', '--roles', write_graph('2\n0 1\n')]) == 0
    graph6, roles = capsys.readouterr().out.strip().splitlines()
    assert parse_graph6(graph6).n == 5
    assert json.loads(roles)['root'] == 4


def test_construct_iterate(write_graph, capsys):
    assert run(['construct', '--iterate', '2', write_graph('A_\n')]) == 0
    assert parse_graph6(capsys.readouterr().out.strip()).n == 11


def test_params(write_graph, capsys):
    assert run(['params', '--det', '--dist', write_graph('Dhc\n')]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['n'] == 5
    assert data['dist']['value'] == 3
    assert data['det']['value'] == 2
    assert 'rho' not in data


def test_quotient(write_graph, capsys):
    assert run(['quotient', write_graph('3\n0 1\n0 2\n')]) == 0
    graph6, classes = capsys.readouterr().out.strip().splitlines()
    assert parse_graph6(graph6).n == 2
    assert json.loads(classes)['classes'] == [[0], [1, 2]]


def test_verify_json(capsys):
    assert run(['verify', '--theorem', 'T-det-main', '--nmax', '3', '--t', '1,2', '--no-seeds']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['summary']['failures'] == 0
    assert data['spec']['t_values'] == [1, 2]


def test_verify_perturbed_exits_one(capsys):
    assert run(['verify', '--theorem', 'T-det-main', '--nmax', '3', '--no-seeds', '--perturb', '1']) == 1


def test_verify_table(capsys):
    assert run(['verify', '--theorem', 'P-degree-laws,O-twins-lift', '--nmax', '2', '--format', 'table', '--no-seeds']) == 0
    assert capsys.readouterr().out.strip().endswith('0 failures')


def test_unknown_theorem_exits_two(capsys):
    assert run(['verify', '--theorem', 'nope', '--nmax', '2']) == 2


def test_malformed_input_exits_two(write_graph):
    assert run(['params', write_graph('A_?\n')]) == 2
    assert run(['params', '/no/such/file']) == 2


def test_bad_t_list_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(['verify', '--t', '1,x'])
    assert exc.value.code == 2


def test_list(capsys):
    assert run(['list']) == 0
    assert 'T-det-main' in capsys.readouterr().out


def test_config_precedence(write_graph, monkeypatch):
    monkeypatch.setenv('MYCSYM_BUDGET', '1000')
    path = write_graph('n_max: 4\nt_values: [3]\nbudget: 2000\n', 'corpus.yaml')
    args = build_parser().parse_args(['verify', '--config', path, '--t', '1'])
    spec = corpus_spec(args)
    assert spec.n_max == 4
    assert spec.t_values == (1,)
    assert spec.budget == 2000


def test_env_defaults(monkeypatch):
    monkeypatch.setenv('MYCSYM_BUDGET', '1000')
    monkeypatch.setenv('MYCSYM_WORKERS', '3')
    spec = corpus_spec(build_parser().parse_args(['verify']))
    assert spec.budget == 1000
    assert spec.workers == 3
    assert spec.seeds
    assert not corpus_spec(build_parser().parse_args(['verify', '--no-seeds'])).seeds


def test_construct_bad_iterate(write_graph):
    assert run(['construct', '--iterate', '0', write_graph('A_\n')]) == 2


def test_logger_level_overrides(monkeypatch):
    monkeypatch.setenv('LOGGERS_DEBUG', 'mycsym.params,mycsym.search')
    setup_logging(logging.WARNING)
    assert logging.getLogger('mycsym.params').level == logging.DEBUG
    assert logging.getLogger('mycsym.search').level == logging.DEBUG
    for name in ('mycsym.params', 'mycsym.search'):
        logging.getLogger(name).setLevel(logging.NOTSET)
