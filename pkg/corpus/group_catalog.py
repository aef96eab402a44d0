"""
Group Catalog - Built-In Bieberbach Groups

Transcriptions of the classical isospectral examples in dimensions 2 to
14, plus the Γⁿ_{k,j} family and a few tori. Entries are referenced on
the command line as `corpus:<name>`.

Translations are listed in lattice coordinates; `_halves(n, i, j, ...)`
is the vector with 1/2 in the listed (1-based) coordinates.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import CORPUS_PREFIX
from core.exceptions import DomainViolation
from core.rational_matrix import RationalMatrix
from groups.bieberbach_group import BieberbachGroup
from .group_file import GroupDefinition, parse_group

J_TILDE = ((0, 1), (-1, 0))


def _diag(*entries: int) -> tuple:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def _blocks(*blocks: Sequence[Sequence[int]]) -> tuple:
    """Block-diagonal integer matrix from square blocks (ints are 1×1 blocks)."""
    blocks = [((b,),) if isinstance(b, int) else b for b in blocks]
    n = sum(len(b) for b in blocks)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, entry in enumerate(row):
                rows[offset + i][offset + j] = entry
        offset += len(block)
    return tuple(tuple(r) for r in rows)


def _halves(n: int, *coordinates: int) -> tuple:
    return tuple(Fraction(1, 2) if i + 1 in coordinates else Fraction(0) for i in range(n))


def _quarter(n: int, coordinate: int) -> tuple:
    return tuple(Fraction(1, 4) if i + 1 == coordinate else Fraction(0) for i in range(n))


def _definition(name: str, dimension: int, generators: list, comments: Sequence[str] = (),
                gram: Optional[RationalMatrix] = None) -> GroupDefinition:
    return GroupDefinition(
        name=name, dimension=dimension, generators=list(generators),
        gram=gram, comments=list(comments),
    )


# =============================================================================
# FAMILIES
# =============================================================================

def torus(n: int) -> GroupDefinition:
    return _definition(f"torus{n}", n, [], [f"canonical torus Z^{n}"])


def klein_bottle(alpha_sq=1, beta_sq=1, name: Optional[str] = None) -> GroupDefinition:
    """Klein bottle over the rectangular lattice with Gram diag(alpha_sq, beta_sq)."""
    gram = RationalMatrix.diagonal([alpha_sq, beta_sq])
    return _definition(
        name or 'klein_bottle', 2,
        [(_diag(-1, 1), _halves(2, 2))],
        ["glide reflection B = diag(-1,1), b = e2/2"],
        gram=None if gram.is_identity() else gram,
    )


def gamma_n_k_j(n: int, k: int, j: int) -> GroupDefinition:
    """Γⁿ_{k,j} = ⟨C_k L_{(e1+...+ej)/2}, Z^n⟩ with C_k = diag(1^k, (-1)^{n-k})."""
    if not 1 <= j <= k < n:
        raise DomainViolation(f"gamma_n_k_j needs 1 <= j <= k < n, got n={n}, k={k}, j={j}")
    c_k = _diag(*([1] * k + [-1] * (n - k)))
    return _definition(
        f"gamma_{n}_{k}_{j}", n,
        [(c_k, _halves(n, *range(1, j + 1)))],
        [f"C_{k} L_(e1+...+e{j})/2 in dimension {n}"],
    )


def gamma_n_k(n: int, k: int) -> GroupDefinition:
    """Γⁿ_k = Γⁿ_{k,1}, i.e. ⟨C_k L_{e1/2}, Z^n⟩."""
    definition = gamma_n_k_j(n, k, 1)
    definition.name = f"gamma_{n}_{k}"
    definition.comments = [f"C_{k} L_e1/2 in dimension {n}"]
    return definition


# =============================================================================
# TRANSCRIBED EXAMPLES
# =============================================================================

def _example_23() -> List[GroupDefinition]:
    iii_b = (
        (0, 1, 0, 0),
        (-1, 0, 0, 0),
        (0, 0, -1, 0),
        (0, 0, 0, 1),
    )
    return [
        _definition('ex23i_gamma', 4, [(_diag(1, -1, -1, -1), _halves(4, 1))],
                    ["Z_2 holonomy, B = diag(1,-1,-1,-1)"]),
        _definition('ex23i_gammap', 4, [(_diag(1, 1, 1, -1), _halves(4, 1))],
                    ["Z_2 holonomy, B' = diag(1,1,1,-1); 2-isospectral to ex23i_gamma only"]),
        _definition('ex23ii_gamma', 4, [(_diag(1, 1, -1, -1), _halves(4, 1))],
                    ["B = diag(1,1,-1,-1), b = e1/2"]),
        _definition('ex23ii_gammap', 4, [(_diag(1, 1, -1, -1), _halves(4, 1, 2))],
                    ["B = diag(1,1,-1,-1), b' = (e1+e2)/2"]),
        _definition('ex23iii_gamma', 4, [
            (_diag(1, 1, -1, -1), _halves(4, 1)),
            (_diag(1, -1, -1, 1), _halves(4, 4)),
        ], ["Z_2^2 holonomy, orientable"]),
        _definition('ex23iii_gammap', 4, [(iii_b, _quarter(4, 4))],
                    ["Z_4 holonomy, B' = diag(J,-1,1), b' = e4/4"]),
        _definition('ex23iv_gamma', 4, [
            (_diag(1, 1, -1, -1), _halves(4, 1, 2, 3, 4)),
            (_diag(1, 1, -1, 1), _halves(4, 4)),
        ], ["Z_2^2 holonomy, same injectivity radius as ex23iv_gammap"]),
        _definition('ex23iv_gammap', 4, [
            (_diag(1, 1, -1, -1), _halves(4, 1, 2)),
            (_diag(1, 1, -1, 1), _halves(4, 2)),
        ], ["Z_2^2 holonomy"]),
        _definition('ex23iv_gamma_variant', 4, [
            (_diag(1, 1, -1, -1), _halves(4, 1, 2, 3, 4)),
            (_diag(1, 1, -1, 1), _halves(4, 2, 4)),
        ], ["ex23iv_gamma with b2 = (e2+e4)/2; injectivity radius differs from ex23iv_gammap"]),
    ]


def _example_33() -> List[GroupDefinition]:
    b1, b2 = _diag(1, 1, -1, -1), _diag(1, -1, 1, -1)
    return [
        _definition('ex33_gamma', 4, [(b1, _halves(4, 2, 4)), (b2, _halves(4, 3))],
                    ["Z_2^2 holonomy; [L_c]-isospectral to ex33_gammap"]),
        _definition('ex33_gammap', 4, [(b1, _halves(4, 2)), (b2, _halves(4, 1))],
                    ["Z_2^2 holonomy"]),
    ]


def _example_34() -> List[GroupDefinition]:
    b1, b2 = _diag(1, 1, 1, -1), _diag(1, 1, -1, 1)
    return [
        _definition('ex34_gamma', 4, [(b1, _halves(4, 1)), (b2, _halves(4, 1, 2))],
                    ["Sunada isospectral to ex34_gammap, not [L]-isospectral"]),
        _definition('ex34_gammap', 4, [(b1, _halves(4, 3, 4)), (b2, _halves(4, 2, 3, 4))],
                    ["Z_2^2 holonomy"]),
    ]


# ex35 point parts on the first four coordinates; the remaining nine
# coordinates are fixed by every element.
_EX35_HEAD = {
    'B1': (1, -1, -1, -1),
    'B2': (-1, 1, -1, -1),
    'B3': (-1, -1, 1, -1),
}
_EX35_TRANSLATIONS = {
    'gamma': {'B1': (3, 5, 8), 'B2': (6, 7), 'B3': (7, 8, 9, 10, 11, 12)},
    'gammap': {'B1': (3, 5, 6, 7, 8, 9, 10), 'B2': (5, 6, 7, 8, 11, 12), 'B3': (8, 13)},
}
# Fourth row (-1,-1,-1) split into two rows for the 14-dimensional variant.
_EX35_SPLIT = {'B1': (-1, 1), 'B2': (-1, 1), 'B3': (1, -1)}


def _example_35(which: str, split: bool) -> GroupDefinition:
    generators = []
    for label in ('B1', 'B2', 'B3'):
        head = _EX35_HEAD[label]
        coordinates = _EX35_TRANSLATIONS[which][label]
        if split:
            head = head[:3] + _EX35_SPLIT[label]
            coordinates = tuple(c + 1 if c >= 5 else c for c in coordinates)
        n = len(head) + 9
        generators.append((_diag(*head, *([1] * 9)), _halves(n, *coordinates)))
    n = 14 if split else 13
    name = f"ex35_14_{which}" if split else f"ex35_{which}"
    comments = [
        "Z_2^3 holonomy, [L_c]-isospectral pair, not p-isospectral",
        "verify against source: translation columns read from the printed table",
    ]
    if split:
        comments[0] = "fourth row split into (-1,-1,1) and (1,1,-1); not p-isospectral except p = 7"
    return _definition(name, n, generators, comments)


def _example_36() -> List[GroupDefinition]:
    minus = ((-1, 0), (0, -1))
    plus = ((1, 0), (0, 1))
    return [
        _definition('ex36_gamma', 6, [
            (_blocks(J_TILDE, J_TILDE, 1, 1), _quarter(6, 5)),
            (_blocks(minus, plus, 1, 1), _halves(6, 6)),
        ], ["Z_4 x Z_2 holonomy; 0-isospectral to ex36_gammap, not L_c-isospectral"]),
        _definition('ex36_gammap', 6, [
            (_blocks(J_TILDE, 1, -1, -1, 1), _quarter(6, 6)),
            (_blocks(minus, -1, 1, -1, 1), _halves(6, 4, 5)),
        ], ["Z_4 x Z_2 holonomy"]),
    ]


def _example_37() -> List[GroupDefinition]:
    b1 = _diag(1, 1, 1, 1, -1, -1, -1)
    b2 = _diag(1, 1, -1, -1, 1, 1, -1)
    return [
        _definition('ex37_gamma', 7, [(b1, _halves(7, 1, 2, 3, 7)), (b2, _halves(7, 1, 2, 5))],
                    ["Z_2^2 holonomy; Sunada and [L]-isospectral to ex37_gammap"]),
        _definition('ex37_gammap', 7, [(b1, _halves(7, 1, 3, 4, 7)), (b2, _halves(7, 1, 5, 6))],
                    ["Z_2^2 holonomy"]),
    ]


def _build_catalog() -> Dict[str, GroupDefinition]:
    entries = [
        torus(2),
        torus(4),
        klein_bottle(),
        klein_bottle(1, 4, name='klein_bottle_rect'),
        *_example_23(),
        *_example_33(),
        *_example_34(),
        _example_35('gamma', split=False),
        _example_35('gammap', split=False),
        _example_35('gamma', split=True),
        _example_35('gammap', split=True),
        *_example_36(),
        *_example_37(),
        gamma_n_k(7, 5),
        gamma_n_k(7, 6),
        gamma_n_k_j(6, 5, 3),
    ]
    return {entry.name: entry for entry in entries}


GROUP_CATALOG: Dict[str, GroupDefinition] = _build_catalog()


def corpus() -> List[GroupDefinition]:
    """All built-in definitions in catalog order."""
    return list(GROUP_CATALOG.values())


def corpus_definition(name: str) -> GroupDefinition:
    try:
        return GROUP_CATALOG[name]
    except KeyError:
        raise DomainViolation(
            f"Unknown corpus group '{name}'; available: {', '.join(GROUP_CATALOG)}"
        ) from None


@lru_cache(maxsize=None)
def corpus_group(name: str, strict: bool = True) -> BieberbachGroup:
    return corpus_definition(name).build(strict)


def resolve_group(reference: str, strict: Optional[bool] = None) -> BieberbachGroup:
    """Build a group from `corpus:<name>` or from a definition file path."""
    if reference.startswith(CORPUS_PREFIX):
        return corpus_group(reference[len(CORPUS_PREFIX):], True if strict is None else strict)
    return parse_group(reference, strict)
