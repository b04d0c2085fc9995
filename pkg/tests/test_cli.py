from __future__ import annotations

import io
import random

import pytest

from fvtangle import PureTangleDiagram, is_canonical, parse, serialize, validate
from fvtangle.cli import main
from fvtangle.generate import rand, random_canonical, random_diagram, random_walk
from fvtangle.sorter import canonical_form

KINK = 'ftangle v1\nstrands 1\nstrand 1: T1 H1\nsigns: 1:+\n'
BIGON = 'ftangle v1\nstrands 1\nstrand 1: T1 T2 H2 H1\nsigns: 1:+ 2:-\n'
EMPTY = 'ftangle v1\nstrands 1\nstrand 1:\nsigns:\n'


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (('kink', KINK), ('bigon', BIGON), ('empty', EMPTY),
                       ('bad', 'ftangle v1\nstrands 1\nstrand 1: H1 T1\nsigns: 1:+\n'),
                       ('junk', 'hello\n'), ('sperm', 'sperm 2\n1:(2,+) 2:(1,+)\n')):
        p = tmp_path / f'{name}.ft'
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_validate(files):
    assert run(['validate', files['kink']]) == (0, 'valid\n', '')
    code, out, err = run(['validate', files['bad']])
    assert code == 1 and out == '' and 'not descending' in err
    code, _, err = run(['validate', files['junk']])
    assert code == 1 and 'line 1' in err


def test_canon(files):
    assert run(['canon', '--mode', 'unframed', files['kink']]) == (0, EMPTY, '')
    assert run(['canon', files['kink']])[1] == KINK
    code, out, _ = run(['canon', '--trace', files['bigon']])
    assert code == 0 and out.startswith(EMPTY + '\nfttrace v1\n')


def test_eq(files):
    assert run(['eq', '--mode', 'framed', files['kink'], files['kink']])[1] == 'equal\n'
    assert run(['eq', '--mode', 'framed', files['bigon'], files['empty']])[1] == 'equal\n'
    assert run(['eq', '--mode', 'framed', files['kink'], files['empty']])[1] == 'distinct\n'
    assert run(['eq', '--mode', 'unframed', files['kink'], files['empty']])[1] == 'equal\n'


def test_eq_requires_mode(files, capsys):
    assert run(['eq', files['kink'], files['kink']])[0] == 2
    assert '--mode' in capsys.readouterr().err


def test_trace_and_verify(files, tmp_path):
    d = tmp_path / 'd.ft'
    d.write_text('ftangle v1\nstrands 2\nstrand 1: T1 H1 T2 T3 H2\nstrand 2: H3\nsigns: 1:+ 2:- 3:+\n')
    code, trace, _ = run(['trace', str(d)])
    assert code == 0 and trace.startswith('fttrace v1\n')
    t = tmp_path / 'd.tr'
    t.write_text(trace)
    assert run(['trace', '--verify', str(t), str(d)]) == (0, f'ok {trace.count("sort ")} steps\n', '')
    t.write_text(trace.replace('R2_delete', 'R1_delete', 1) if 'R2_delete' in trace
                 else trace.replace('R3', 'R2_delete', 1))
    assert run(['trace', '--verify', str(t), str(d)])[0] == 1


def test_census():
    assert run(['census', '--strands', '1', '--max-crossings', '2', '--mode', 'framed']) == \
        (0, '0:1 1:2 2:4\n', '')
    code, out, _ = run(['census', '--strands', '1', '--max-crossings', '2', '--list'])
    records = out.split('\n\n')
    assert code == 0 and len(records) == 7
    assert all(is_canonical(parse(r)) for r in records)


def test_braid():
    code, out, _ = run(['braid', '--strands', '3', '--mode', 'framed', '1>2 2>1'])
    assert code == 0
    assert out == 'ftangle v1\nstrands 3\nstrand 1:\nstrand 2:\nstrand 3:\nsigns:\n'
    assert run(['braid', '--strands', '2', '1>3'])[0] == 1
    assert run(['braid', '--strands', '2', '1=2'])[0] == 1


def test_perm(files):
    c = PureTangleDiagram([[1, 2, -2, -1]], [1, 1])
    assert run(['perm', 'decode', files['sperm']]) == (0, serialize(c), '')
    code, out, _ = run(['perm', 'encode', files['kink']])
    assert (code, out) == (0, 'sperm 1\n1:(1,+)\n')
    assert run(['perm', 'encode', files['bigon']])[0] == 1


def test_rand_is_deterministic():
    argv = ['rand', '--seed', '7', '--strands', '2', '--crossings', '4', '--moves', '6']
    first = run(argv)
    assert first[0] == 0 and validate(parse(first[1])) is None
    assert run(argv) == first
    assert run(argv[:2] + ['8'] + argv[3:])[1] != first[1]


def test_oracle_eq(files):
    code, out, _ = run(['oracle-eq', '--max-crossings', '4', files['bigon'], files['empty']])
    assert code == 0 and out == 'equivalent\nR2_delete 1 2\n'
    code, out, _ = run(['oracle-eq', '--max-crossings', '3', '--max-states', '1000',
                        files['kink'], files['empty']])
    assert (code, out) == (0, 'unknown\n')


def test_usage_and_domain_errors(files, capsys):
    assert run([])[0] == 2
    assert run(['frobnicate'])[0] == 2
    assert run(['census', '--strands', '0', '--max-crossings', '1'])[0] == 2
    code, out, err = run(['canon', '/no/such/file'])
    assert code == 1 and out == '' and err.startswith('ft: ')


def test_random_generation_helpers():
    rng = random.Random(3)
    for _ in range(50):
        d = random_diagram(rng, rng.randint(1, 3), rng.randint(0, 6))
        assert validate(d) is None
        c = random_canonical(rng, 2, 4, 'unframed')
        assert is_canonical(c, 'unframed')
        w, path = random_walk(c, rng, 5, 'unframed')
        assert validate(w) is None and len(path) == 5
        assert canonical_form(w, 'unframed') == c
    assert rand(1, 2, 3, 4) == rand(1, 2, 3, 4)
