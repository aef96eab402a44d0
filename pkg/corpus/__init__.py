"""
Corpus - Group Definition Files and the Built-In Example Groups
"""

from .group_file import GroupDefinition, parse_definition, parse_group, emit_definition
from .group_catalog import (
    GROUP_CATALOG, corpus, corpus_definition, corpus_group, resolve_group,
    gamma_n_k, gamma_n_k_j, klein_bottle, torus,
)
from .isospectral_pairs import ISOSPECTRAL_PAIRS, IsospectralPair, isospectral_pair, pair_for

__all__ = [
    'GroupDefinition', 'parse_definition', 'parse_group', 'emit_definition',
    'GROUP_CATALOG', 'corpus', 'corpus_definition', 'corpus_group', 'resolve_group',
    'gamma_n_k', 'gamma_n_k_j', 'klein_bottle', 'torus',
    'ISOSPECTRAL_PAIRS', 'IsospectralPair', 'isospectral_pair', 'pair_for',
]
