import json

import pytest

from app import main
from corpus.group_catalog import corpus_definition
from corpus.group_file import emit_definition


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# =============================================================================
# SINGLE-GROUP COMMANDS
# =============================================================================

def test_lengths_golden(capsys, datadir):
    code, out, _ = run(capsys, 'lengths', 'corpus:klein_bottle', '--max-len2', '9/4', '--format', 'json')
    assert code == 0
    assert out == (datadir / 'klein_bottle_lengths.json').read_text(encoding='utf-8')


def test_lengths_of_ex34(capsys):
    code, out, _ = run(capsys, 'lengths', 'corpus:ex34_gamma', '--max-len2', '1/4', '--format', 'json')
    assert code == 0
    classes = json.loads(out)['classes']
    assert [(c['length_sq'], c['count']) for c in classes] == [('1/4', 12)]


def test_weak_lengths_drop_counts(capsys):
    code, out, _ = run(capsys, 'lengths', 'corpus:klein_bottle', '--max-len2', '1',
                       '--mode', 'weak', '--include-zero', '--format', 'json')
    assert code == 0
    classes = json.loads(out)['classes']
    assert [c['length_sq'] for c in classes] == ['0', '1/4', '1']
    assert all('count' not in c for c in classes)


def test_info(capsys):
    code, out, _ = run(capsys, 'info', 'corpus:ex23iii_gammap', '--format', 'json')
    assert code == 0
    table = {row['property']: row['value'] for row in json.loads(out)['table']}
    assert table['holonomy_order'] == 4
    assert table['orientable'] is False
    assert table['injectivity_radius_sq'] == '1/64'


def test_spectrum_text(capsys):
    code, out, _ = run(capsys, 'spectrum', 'corpus:klein_bottle', '--p', '0', '--max-mu', '2')
    assert code == 0
    assert out.startswith('klein_bottle (dimension 2)\n')
    assert 'multiplicity' in out


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, 'spectrum', 'corpus:klein_bottle', '--p', '0', '--max-mu', '2',
                       '--format', 'csv')
    assert code == 0
    assert out.splitlines() == ['p,mu,multiplicity', '0,0,1', '0,1,1', '0,2,2']


# =============================================================================
# COMPARISONS
# =============================================================================

def test_compare_equal_degree(capsys):
    code, out, _ = run(capsys, 'compare', 'corpus:ex23i_gamma', 'corpus:ex23i_gammap',
                       '--mode', 'p-spectrum', '--p', '2', '--max-mu', '4')
    assert code == 0
    assert 'verdict: equal' in out


def test_compare_divergent_degree(capsys):
    code, out, _ = run(capsys, 'compare', 'corpus:ex23i_gamma', 'corpus:ex23i_gammap',
                       '--mode', 'p-spectrum', '--p', '0', '--max-mu', '4', '--format', 'json')
    assert code == 2
    report = json.loads(out)
    assert report['verdict'] == 'divergent'
    assert report['witnesses'][0]['p'] == 0


def test_compare_counted_lengths(capsys):
    code, out, _ = run(capsys, 'compare', 'corpus:ex34_gamma', 'corpus:ex34_gammap',
                       '--max-len2', '1', '--format', 'json')
    assert code == 2
    rows = {row['length_sq']: (row['a'], row['b']) for row in json.loads(out)['classes']}
    assert rows['1/4'] == (12, 6)


def test_compare_weak_lengths(capsys):
    code, _, _ = run(capsys, 'compare', 'corpus:ex34_gamma', 'corpus:ex34_gammap',
                     '--mode', 'weak', '--max-len2', '1')
    assert code == 0


def test_compare_dimension_mismatch(capsys):
    code, _, err = run(capsys, 'compare', 'corpus:klein_bottle', 'corpus:torus4')
    assert code == 1
    assert 'error:' in err


def test_sunada_not_applicable_is_an_error(capsys):
    code, _, err = run(capsys, 'compare', 'corpus:ex36_gamma', 'corpus:ex36_gammap', '--mode', 'sunada')
    assert code == 1
    assert 'error:' in err


# =============================================================================
# CORPUS AND FILES
# =============================================================================

def test_corpus_list(capsys):
    code, out, _ = run(capsys, 'corpus', 'list', '--format', 'json')
    assert code == 0
    names = [row['name'] for row in json.loads(out)['table']]
    assert 'klein_bottle' in names
    assert 'ex34_gammap' in names


def test_corpus_emit(capsys):
    code, out, _ = run(capsys, 'corpus', 'emit', 'klein_bottle')
    assert code == 0
    assert out == emit_definition(corpus_definition('klein_bottle'))


def test_group_file_round_trip(capsys, tmp_path):
    path = tmp_path / 'klein.txt'
    path.write_text(emit_definition(corpus_definition('klein_bottle')), encoding='utf-8')
    code, out, _ = run(capsys, 'lengths', str(path), '--max-len2', '1/4', '--format', 'json')
    assert code == 0
    assert json.loads(out)['classes'][0]['count'] == 4


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, 'info', str(tmp_path / 'absent.txt'))
    assert code == 1
    assert 'error:' in err


def test_unknown_corpus_name(capsys):
    code, _, err = run(capsys, 'info', 'corpus:no_such_group')
    assert code == 1
    assert 'error:' in err


@pytest.mark.parametrize('argv', [
    ['frobnicate'],
    ['lengths', 'corpus:klein_bottle', '--mode', 'fuzzy'],
    ['zeta', 'corpus:klein_bottle', '--s', '-1'],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


# =============================================================================
# PDF
# =============================================================================

def test_pdf_report(capsys, tmp_path):
    target = tmp_path / 'report.pdf'
    code, out, _ = run(capsys, 'compare', 'corpus:ex34_gamma', 'corpus:ex34_gammap',
                       '--max-len2', '1', '--format', 'pdf', '--output', str(target))
    assert code == 2
    assert out.strip() == str(target)
    assert target.read_bytes().startswith(b'%PDF')


def test_pdf_requires_output(capsys):
    code, _, _ = run(capsys, 'info', 'corpus:klein_bottle', '--format', 'pdf')
    assert code == 1
