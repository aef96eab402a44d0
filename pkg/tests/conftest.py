import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from corpus.group_catalog import corpus_group  # noqa: E402

DATADIR = Path(__file__).parent / "data"

# Corpus entries cheap enough for exhaustive property sweeps.
SMALL_CORPUS = [
    'torus2', 'torus4', 'klein_bottle', 'klein_bottle_rect',
    'ex23i_gamma', 'ex23i_gammap', 'ex23ii_gamma', 'ex23ii_gammap',
    'ex23iii_gamma', 'ex23iii_gammap', 'ex23iv_gamma', 'ex23iv_gammap', 'ex23iv_gamma_variant',
    'ex33_gamma', 'ex33_gammap', 'ex34_gamma', 'ex34_gammap',
    'ex36_gamma', 'ex36_gammap', 'ex37_gamma', 'ex37_gammap',
    'gamma_6_5_3',
]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweep; deselect with -m 'not slow'")


@pytest.fixture
def group():
    """Corpus lookup: group('klein_bottle')."""
    return corpus_group


@pytest.fixture
def klein(group):
    return group('klein_bottle')


@pytest.fixture
def datadir() -> Path:
    return DATADIR
