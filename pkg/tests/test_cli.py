import pytest

from tracezero import __version__
from tracezero.cli import DEFAULT_SEED, format_line, main, parse_line, resolve_seed


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):

    with pytest.raises(SystemExit):
        main(['--version'])

    assert __version__ in capsys.readouterr().out


def test_parse_and_format_line():

    assert format_line(parse_line(' 642,987 ', 1021)) == '642,987'
    assert format_line(parse_line('inf', 1021)) == 'inf'
    with pytest.raises(ValueError):
        parse_line('1,2,3', 1021)


def test_resolve_seed(monkeypatch):

    monkeypatch.delenv('TRACEZERO_SEED', raising=False)
    assert resolve_seed(None) == DEFAULT_SEED
    assert resolve_seed(5) == 5

    monkeypatch.setenv('TRACEZERO_SEED', '77')
    assert resolve_seed(None) == 77


@pytest.mark.parametrize(('scalar', 'expected'), [('2', '280,1000'), ('0', 'inf'), ('644875', '587,105'), ('-1', '379,34')])
def test_mul(capsys, scalar, expected):
    assert _run(capsys, 'mul', f'--scalar={scalar}') == (0, f'{expected}\n', '')


def test_mul_with_line(capsys):
    assert _run(capsys, 'mul', '--line', '705,729', '--scalar', '1', '--algo', 'oracle') == (0, '705,729\n', '')


def test_mul_rejects_invalid_line(capsys):

    code, _, err = _run(capsys, 'mul', '--line', '1,2,3', '--scalar', '1')
    assert code == 3
    assert err.startswith('error:')


def test_compress_and_decompress(capsys):

    assert _run(capsys, 'compress', '--point', '45,802,782,133,299,979') == (0, '642,987\n', '')

    code, out, _ = _run(capsys, 'decompress', '--line', '642,987')
    assert code == 0
    assert len(out.strip().split(',')) == 6

    assert _run(capsys, 'compress', '--point', out.strip()) == (0, '642,987\n', '')


def test_compress_point_off_curve(capsys):
    assert _run(capsys, 'compress', '--point', '1,2,3,4,5,6')[0] == 3


def test_params_builtin(capsys):

    code, out, _ = _run(capsys, 'params', '--builtin', 'curve1')
    assert code == 0
    assert out.splitlines()[4:6] == ['p=1021381', 's=161217']


def test_params_file_round_trip(capsys, tmp_path):

    path = tmp_path / 'curve2.params'
    assert _run(capsys, 'params', '--builtin', 'curve2', '--out', str(path))[0] == 0
    assert _run(capsys, 'mul', '--params', str(path), '--scalar', '1') == (0, '391,789\n', '')


def test_params_bad_field(capsys):
    assert _run(capsys, 'params', '--q', '11')[0] == 3


def test_params_missing_file(capsys, tmp_path):
    assert _run(capsys, 'mul', '--params', str(tmp_path / 'missing'), '--scalar', '1')[0] == 3


def test_dh(capsys):

    code, out, _ = _run(capsys, 'dh', '--algo', 'ladder')
    assert code == 0
    assert out.splitlines()[-1].startswith('shared ')


def test_selftest(capsys):

    code, out, _ = _run(capsys, 'selftest', '--vector', 'curve1/subgroup', '--vector', 'curve1/compress')
    assert code == 0
    assert out == 'ok   curve1/subgroup\nok   curve1/compress\n'


def test_difftest_smoke(capsys):

    code, out, _ = _run(capsys, '--seed', '3', 'difftest', '--algos', 'ladder', '--trials', '3')
    assert code == 0
    assert out.startswith('q=1021 p=1021381 trials=3 mismatches=0')


def test_bench(capsys):

    code, out, _ = _run(capsys, 'bench', '--trials', '2', '--algos', 'oracle', 'ladder')
    assert code == 0
    assert 'ms/mul' in out
