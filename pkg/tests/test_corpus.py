import logging

import pytest

from core.exceptions import DomainViolation, ParseError, TorsionViolation
from corpus.group_catalog import (
    GROUP_CATALOG, corpus, corpus_definition, corpus_group, gamma_n_k_j, resolve_group,
)
from corpus.group_file import emit_definition, parse_definition, parse_group
from corpus.isospectral_pairs import ISOSPECTRAL_PAIRS, isospectral_pair, pair_for
from groups.group_properties import torsion_free_check
from reports.comparison_report import compare_table, reproduce_verdict_table

KLEIN_TEXT = """\
# glide reflection
name klein_bottle
dimension 2
gram identity
generator
  -1 0
  0 1
translation 0 1/2
end
"""

TORSION_TEXT = """\
name reflection
dimension 2
gram identity
generator
  -1 0
  0 1
translation 1/2 0
end
"""


def test_catalog_size():
    assert len(corpus()) >= 20
    assert [d.name for d in corpus()] == list(GROUP_CATALOG)


@pytest.mark.parametrize('name', list(GROUP_CATALOG))
def test_every_entry_is_torsion_free(name):
    group = corpus_group(name)
    assert group.dimension == corpus_definition(name).dimension
    assert torsion_free_check(group).passed


@pytest.mark.parametrize('name', list(GROUP_CATALOG))
def test_emit_parse_is_stable(name):
    text = emit_definition(corpus_definition(name))
    assert emit_definition(parse_definition(text)) == text


def test_parse_klein_text():
    definition = parse_definition(KLEIN_TEXT)
    assert definition.name == 'klein_bottle'
    assert definition.comments == ['glide reflection']
    assert emit_definition(definition) == KLEIN_TEXT
    assert definition.build().holonomy_order == 2


def test_parse_non_identity_gram():
    text = emit_definition(corpus_definition('klein_bottle_rect'))
    assert 'gram\n  1 0\n  0 4\n' in text
    assert parse_definition(text).gram_matrix == corpus_group('klein_bottle_rect').gram


def test_parse_group_from_file(tmp_path):
    path = tmp_path / 'klein.txt'
    path.write_text(KLEIN_TEXT)
    assert parse_group(str(path)).holonomy_order == 2
    assert resolve_group(str(path)).holonomy_order == 2


@pytest.mark.parametrize('text, line, field', [
    ("dimension 2\n", 1, 'name'),
    ("name x\ndimension zero\n", 2, 'dimension'),
    ("name x\ndimension 2\ngram diagonal\n", 3, 'gram'),
    ("name x\ndimension 2\ngram identity\ngenerator\n  1/2 0\n  0 1\ntranslation 0 0\nend\n", 5, 'matrix'),
    ("name x\ndimension 2\ngram identity\ngenerator\n  -1 0\n  0 1\ntranslation 0\nend\n", 7, 'translation'),
    ("name x\ndimension 2\ngram identity\nrotation\nend\n", 4, 'generator'),
    ("name x\ndimension 2\ngram identity\n", 3, 'end'),
])
def test_parse_errors_name_line_and_field(text, line, field):
    with pytest.raises(ParseError) as excinfo:
        parse_definition(text)
    assert excinfo.value.line == line
    assert excinfo.value.field == field


def test_content_after_end():
    with pytest.raises(ParseError) as excinfo:
        parse_definition(KLEIN_TEXT + "name again\n")
    assert excinfo.value.line == 10


def test_torsion_warning_and_strict_mode(caplog):
    definition = parse_definition(TORSION_TEXT)
    with caplog.at_level(logging.WARNING):
        group = definition.build(strict=False)
    assert group.holonomy_order == 2
    assert 'not torsion free' in caplog.text
    with pytest.raises(TorsionViolation):
        definition.build(strict=True)


def test_gamma_family():
    assert corpus_group('gamma_6_5_3').holonomy_order == 2
    assert corpus_group('gamma_7_5').cosets[1].translation[0] == corpus_group('gamma_7_6').cosets[1].translation[0]
    with pytest.raises(DomainViolation):
        gamma_n_k_j(4, 2, 3)
    with pytest.raises(DomainViolation):
        gamma_n_k_j(4, 4, 1)


def test_unknown_names():
    with pytest.raises(DomainViolation):
        corpus_definition('no_such_group')
    with pytest.raises(DomainViolation):
        resolve_group('corpus:no_such_group')
    with pytest.raises(DomainViolation):
        isospectral_pair('ex99')


def test_isospectral_pairs():
    assert len(ISOSPECTRAL_PAIRS) == 7
    for pair in ISOSPECTRAL_PAIRS:
        assert pair.gamma in GROUP_CATALOG
        assert pair.gammap in GROUP_CATALOG
        assert pair_for(pair.gammap, pair.gamma) is pair
    assert pair_for('torus2', 'klein_bottle') is None
    assert isospectral_pair('ex35').spectrum_mu == 1


# =============================================================================
# VERDICT TABLE
# =============================================================================

TABLE_ROWS = [
    pytest.param(pair, id=pair.key, marks=pytest.mark.slow) if pair.key == 'ex35'
    else pytest.param(pair, id=pair.key)
    for pair in ISOSPECTRAL_PAIRS
]


@pytest.mark.parametrize('pair', TABLE_ROWS)
def test_table_row_matches_expected_verdicts(pair):
    report = compare_table(corpus_group(pair.gamma), corpus_group(pair.gammap), pair)
    mismatched = [row['column'] for row in report.table if row['matches'] is False]
    assert mismatched == []


def test_reproduced_table_is_equal():
    report = reproduce_verdict_table([isospectral_pair('ex34'), isospectral_pair('ex23i')], corpus_group)
    assert report.verdict == 'equal'
    assert report.witnesses == []
    assert {row['example'] for row in report.table} == {'ex34', 'ex23i'}
