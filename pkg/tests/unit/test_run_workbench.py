from __future__ import annotations

import json

from permbox.twobyfour.class_sampler import get_sampler_class
from permbox.twobyfour.gf_catalog import export_bfile
from permbox.twobyfour.perm_core import avoids_all, parse_permutation
from permbox.twobyfour.run_workbench import main


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_table(capsys) -> None:
    code, out, _ = _run(capsys, 'count', '--basis', '4123,1324', '--max-n', '6')
    assert code == 0
    assert out.splitlines()[-1] == '6 352'
    code, out, _ = _run(capsys, 'count', '--basis', '4123,1243', '--contains', '1423', '--max-n', '4')
    assert out.splitlines()[-1] == '4 1'
    code, out, _ = _run(capsys, 'count', '--basis', '4123,1324', '--max-n', '0')
    assert out == '0 1\n'


def test_count_threads_match(capsys) -> None:
    _, single, _ = _run(capsys, 'count', '--basis', '4123,1342', '--max-n', '7')
    _, multi, _ = _run(capsys, 'count', '--basis', '4123,1342', '--max-n', '7', '--threads', '2')
    assert single == multi


def test_usage_errors(capsys) -> None:
    code, out, err = _run(capsys, 'count', '--basis', '41x3', '--max-n', '3')
    assert code == 2
    assert out == ''
    assert err.startswith('ERROR:')
    code, _, err = _run(capsys, 'series', '--gf', 'NOPE', '--terms', '5')
    assert code == 2
    assert 'Unknown catalog id' in err
    assert main([]) == 2
    capsys.readouterr()


def test_series_formats(capsys) -> None:
    code, out, _ = _run(capsys, 'series', '--gf', 'P3', '--terms', '10')
    assert code == 0
    assert out.splitlines()[-1] == '10 98677'
    _, out, _ = _run(capsys, 'series', '--gf', 'P3', '--terms', '10', '--format', 'csv')
    assert out.splitlines()[0] == 'n,value'
    assert out.splitlines()[-1] == '10,98677'
    _, out, _ = _run(capsys, 'series', '--gf', 'P3', '--terms', '10', '--format', 'json')
    rows = json.loads(out)
    assert rows[-1] == {'n': 10, 'value': '98677'}
    _, out, _ = _run(capsys, 'series', '--gf', 'P1', '--terms', '40', '--format', 'bfile')
    assert out == export_bfile('P1', 40)


def test_series_output_file(capsys, tmp_path) -> None:
    target = tmp_path / 'p2.txt'
    code, out, err = _run(capsys, 'series', '--gf', 'P2', '--terms', '10', '--output', str(target))
    assert code == 0
    assert out == ''
    assert 'INFO:' in err
    assert target.read_text(encoding='utf-8').splitlines()[-1] == '10 122752'


def test_verify_and_identities(capsys) -> None:
    code, out, _ = _run(capsys, 'verify', '--gf', 'P1', '--max-n', '9')
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert all(line.endswith('PASS') for line in lines)
    code, out, _ = _run(capsys, 'identities', '--terms', '50')
    assert code == 0
    assert all(line.startswith('PASS') for line in out.splitlines())


def test_catalog_and_decompose(capsys) -> None:
    code, out, _ = _run(capsys, 'catalog')
    assert code == 0
    assert 'P1 4123,1324 Av(4123,1324)' in out.splitlines()
    code, out, _ = _run(capsys, 'decompose', '--perm', '31524', '--format', 'json')
    record = json.loads(out)
    assert record['minima_positions'] == '0,1'
    assert record['source_graph_patterns'] == '1,3,2;1,2'


def test_sample_is_reproducible(capsys) -> None:
    argv = ('sample', '--class', 'flag', '--length', '60', '--count', '1', '--seed', '7')
    code, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert code == 0
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 1
    perm = parse_permutation(lines[0])
    assert len(perm) == 60
    assert avoids_all(perm, get_sampler_class('flag').basis)


def test_sample_json(capsys) -> None:
    code, out, _ = _run(capsys, 'sample', '--class', 'fan', '--length', '5', '--count', '3', '--seed', '1', '--format', 'json')
    assert code == 0
    perms = json.loads(out)
    assert len(perms) == 3
    assert all(sorted(p) == [1, 2, 3, 4, 5] for p in perms)


def test_growth_ratio_asym(capsys) -> None:
    code, out, _ = _run(capsys, 'growth', '--gf', 'P2', '--terms', '400')
    assert code == 0
    assert abs(float(out) - 5) < 0.01
    code, out, _ = _run(capsys, 'ratio', '--num', 'J', '--den', 'P2', '--n', '500')
    assert code == 0
    assert abs(float(out) - 99 / 119) < 0.02
    code, out, _ = _run(capsys, 'asym', '--gf', 'P1', '--n', '300', '--order', '1', '--format', 'json')
    assert code == 0
    report = json.loads(out)
    assert report['entry'] == 'P1'
    assert report['K'] == 1
    assert float(report['relative_error']) < 1e-4


def test_bfile_format_rejected_for_records(capsys) -> None:
    code, _, err = _run(capsys, 'decompose', '--perm', '312', '--format', 'bfile')
    assert code == 2
    assert err.startswith('ERROR:')


def test_enumerate_lists_members(capsys) -> None:
    code, out, _ = _run(capsys, 'enumerate', '--basis', '4123,1243', '--contains', '1423', '--n', '4')
    assert code == 0
    assert out == '1423\n'
    code, _, err = _run(capsys, 'enumerate', '--basis', '132', '--n', '6', '--cap', '5')
    assert code == 2
    assert 'count mode' in err


def test_relative_output_goes_through_store(capsys, store_root) -> None:
    code, out, _ = _run(capsys, 'count', '--basis', '4123,1342', '--max-n', '5', '--format', 'csv', '--output', 'tables/p3.csv')
    assert code == 0
    assert out == ''
    lines = (store_root / 'tables' / 'p3.csv').read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'n,value'
    assert lines[-1] == '5,87'
