import os
import json
import argparse
import importlib
from fractions import Fraction

import pytest

from trustlam import env
from trustlam.cli import main
from trustlam.errors import ConfigError
from trustlam.parameters import read_yaml

FAIR = '(1/2 H, 1/2 T)@1/4'


@pytest.fixture(autouse=True)
def isolated(tmp_env):
    return tmp_env


def get_cli(command):
    CLI = importlib.import_module(f'trustlam.cli.{command}').CLI
    cli = CLI(argparse.ArgumentParser())
    return cli


def write_program(tmp_path, text, name='prog.tl'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_check(capsys):
    cli = get_cli('check')
    cli.main(argparse.Namespace(file='coin', format='text'))
    assert capsys.readouterr().out == 'H+T\n'

    cli.main(argparse.Namespace(file='dice_trust', format='json'))
    out = json.loads(capsys.readouterr().out)
    assert out['type'].startswith('Bool(1/6 One')
    assert out['main'].startswith('trust exp[4]')


@pytest.mark.parametrize('text, exit_code, code', [
    ('', 3, 'syntax'),
    ('type H;\nconst h : H;\nmain = <h, y>', 4, 'unbound-variable'),
])
def test_check_errors(tmp_path, capsys, text, exit_code, code):
    path = write_program(tmp_path, text)
    with pytest.raises(SystemExit) as excinfo:
        main(['check', path])
    assert excinfo.value.code == exit_code
    diag = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert diag['code'] == code
    assert diag['severity'] == 'error'


def test_missing_file(tmp_path, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['check', str(tmp_path / 'nope.tl')])
    assert excinfo.value.code == 2
    assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])['code'] == 'io'


def test_no_command(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 1
    assert 'commands' in capsys.readouterr().out


def test_run_is_reproducible(capsys):
    cli = get_cli('run')
    args = argparse.Namespace(file='coin', seed=3, trials=20, trace=False, format='text')
    cli.main(args)
    first = capsys.readouterr().out
    cli.main(args)
    assert capsys.readouterr().out == first
    lines = first.splitlines()
    assert len(lines) == 20
    assert set(lines) <= {'h', 't'}


def test_run_dice_trust(capsys):
    cli = get_cli('run')
    cli.main(argparse.Namespace(file='dice_trust', seed=0, trials=5, trace=False, format='text'))
    assert capsys.readouterr().out.splitlines() == ['false'] * 5


def test_run_trace(capsys):
    cli = get_cli('run')
    cli.main(argparse.Namespace(file='composite', seed=0, trials=2, trace=True, format='json'))
    runs = json.loads(capsys.readouterr().out)['runs']
    assert [r['seed'] for r in runs] == [0, 1]
    assert runs[0]['steps'][0]['rule'] == 'beta'
    assert runs[0]['final'] in ('h', 't')

    cli.main(argparse.Namespace(file='composite', seed=0, trials=1, trace=True, format='text'))
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '# seed 0'
    assert lines[-1] == runs[0]['final']


def test_run_seed_range():
    with pytest.raises(SystemExit) as excinfo:
        main(['run', 'coin', '--seed', str(2**64 - 1), '--trials', '2'])
    assert excinfo.value.code == 2


def test_dist(capsys):
    cli = get_cli('dist')
    cli.main(argparse.Namespace(file='composite', format='text', decimal=False, node_limit=None))
    assert capsys.readouterr().out.splitlines() == ['h: 1/2', 't: 1/2']

    cli.main(argparse.Namespace(file='biased_coin', format='text', decimal=True, node_limit=None))
    assert capsys.readouterr().out.splitlines()[0] == 'h: ' + repr(2 / 3)

    cli.main(argparse.Namespace(file='coin', format='json', decimal=False, node_limit=None))
    assert json.loads(capsys.readouterr().out)['outputs'][1] == {'value': 't', 'prob': '1/2'}


def test_tree(capsys):
    cli = get_cli('tree')
    cli.main(argparse.Namespace(file='two_trues', format='dot', decimal=False, node_limit=None))
    dot = capsys.readouterr().out
    assert dot.count(' -> ') == 2
    assert dot.rstrip().endswith('}')

    cli.main(argparse.Namespace(file='coin_tree', format='text', decimal=False, node_limit=None))
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert lines[1].startswith('  [1] {2/3 h, 1/3 t}')
    assert lines[2] == '    [2/3] h'


def test_tree_node_limit(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['tree', 'dice', '--node-limit', '1000'])
    assert excinfo.value.code == 6
    diag = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert diag['code'] == 'node-limit'
    assert '1556' in diag['message']


def test_confidence(capsys):
    cli = get_cli('confidence')
    args = argparse.Namespace(file='coin', target=FAIR, eps=None, n_max=20, n=[12, 4, 8],
                              compare=None, format='text', decimal=False, plot=None,
                              node_limit=None)
    cli.main(args)
    lines = capsys.readouterr().out.splitlines()
    assert lines == ['# target ' + FAIR, '4\t7/8', '8\t119/128', '12\t1969/2048']


def test_confidence_eps_override(capsys):
    cli = get_cli('confidence')
    args = argparse.Namespace(file='biased_coin', target=FAIR, eps=Fraction(1), n_max=3, n=None,
                              compare=None, format='json', decimal=False, plot=None,
                              node_limit=None)
    cli.main(args)
    out = json.loads(capsys.readouterr().out)
    assert out['target'] == '(1/2 H, 1/2 T)@1'
    assert [p['confidence'] for p in out['curves'][0]['points']] == ['1', '1', '1']


def test_confidence_compare(capsys):
    main(['confidence', 'biased_coin', '--compare', 'coin', '--target', '(1/2 H, 1/2 T)@1/10'])
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 22
    assert len(lines[1].split('\t')) == 3
    assert lines[-1] == '# biased_coin precedes coin'


def test_confidence_plot(tmp_path):
    pytest.importorskip('matplotlib')
    save = tmp_path / 'curve.png'
    main(['confidence', 'coin', '--target', FAIR, '--n-max', '6', '--plot', str(save)])
    assert save.exists()


def test_trust(capsys):
    cli = get_cli('trust')
    args = argparse.Namespace(file='coin', n=4, target=FAIR, eps=None, seed=0, trials=3,
                              format='text', decimal=False, node_limit=None)
    cli.main(args)
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == f'# target {FAIR}, n = 4'
    assert set(lines[1:4]) <= {'true', 'false'}
    assert lines[-1] == 'Pr(true) = 7/8'


def test_trust_default_target(capsys):
    main(['trust', 'coin', '--format', 'json', '--trials', '2'])
    out = json.loads(capsys.readouterr().out)
    assert out['target'] == '(1/2 H, 1/2 T)@1/20'
    assert out['n'] == 10
    assert [v['seed'] for v in out['verdicts']] == [0, 1]


def test_get(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    cli = get_cli('get')
    cli.main(argparse.Namespace(thing='list'))
    listed = capsys.readouterr().out.split()
    assert 'coin' in listed and 'dice_trust' in listed

    cli.main(argparse.Namespace(thing='coin'))
    assert 'coin.tl' in os.listdir(tmp_path)

    cli.main(argparse.Namespace(thing='params'))
    params = read_yaml(str(tmp_path / 'params.yaml'))
    assert params['epsilon'] == Fraction(1, 20)
    assert params['node_limit'] == 200000

    with pytest.raises(FileNotFoundError):
        cli.main(argparse.Namespace(thing='no_such_program'))


def test_set_and_reset(tmp_path):
    cli = get_cli('set')
    cli.main(argparse.Namespace(thing=['node_limit', '1000', 'epsilon', '1/10']))
    assert env.get_default('node_limit') == 1000
    assert env.get_default('epsilon') == Fraction(1, 10)

    params = tmp_path / 'params.yaml'
    params.write_text('fuel: 500\ncompare_tol: 1/50\n')
    cli.main(argparse.Namespace(thing=[str(params)]))
    assert env.get_default('fuel') == 500
    assert env.get_default('compare_tol') == Fraction(1, 50)

    with pytest.raises(ConfigError):
        cli.main(argparse.Namespace(thing=['epsilon', '0.1']))
    with pytest.raises(SystemExit):
        cli.main(argparse.Namespace(thing=['epsilon', '1/10', 'fuel']))

    reset = get_cli('reset')
    reset.main(argparse.Namespace(thing=['epsilon']))
    assert env.get_default('epsilon') == Fraction(1, 20)
    assert env.get_default('fuel') == 500
    with pytest.raises(ConfigError):
        reset.main(argparse.Namespace(thing=['bogus']))
    reset.main(argparse.Namespace(thing=['all']))
    assert env.get_default('fuel') == 1000000


def test_node_limit_from_env(capsys):
    main(['set', 'node_limit', '1000'])
    with pytest.raises(SystemExit) as excinfo:
        main(['tree', 'dice'])
    assert excinfo.value.code == 6


def test_labelled_env(isolated, monkeypatch):
    monkeypatch.setattr(env, 'default_env_file', str(isolated))
    main(['-e', 'strict', 'set', 'epsilon', '1/7'])
    assert os.path.exists(str(isolated) + '.strict')
    assert env.get_default('epsilon') == Fraction(1, 7)


def test_info(capsys):
    main(['set', 'fuel', '42'])
    capsys.readouterr()
    get_cli('info').main(argparse.Namespace())
    out = capsys.readouterr().out
    assert f'env file: {env.env_file}' in out
    lines = out.splitlines()
    fuel = next(line for line in lines if line.startswith('fuel'))
    assert '= 42' in fuel and env.env_file in fuel
    epsilon = next(line for line in lines if line.startswith('epsilon'))
    assert '= 1/20' in epsilon and '[defaults.yaml]' in epsilon


@pytest.mark.slow
def test_run_frequencies(capsys):
    cli = get_cli('run')
    trials = 60000
    cli.main(argparse.Namespace(file='coin', seed=0, trials=trials, trace=False, format='text'))
    heads = capsys.readouterr().out.splitlines().count('h')
    assert abs(Fraction(heads, trials) - Fraction(1, 2)) <= Fraction(1, 100)
