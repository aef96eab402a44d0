"""
Norm Series - Truncated Series Indexed by Exact Squared Norms

A series maps rational exponents (squared norms) to weights. The product
of the one-dimensional series of an orthogonal lattice is the shell
series of the whole lattice, which lets shell counts and character sums
of high-dimensional diagonal lattices be obtained without enumerating
every vector.
"""

from fractions import Fraction
from typing import Dict, Iterable

Series = Dict[Fraction, object]


def convolve(left: Series, right: Series, limit: Fraction) -> Series:
    """Product of two series, dropping exponents above limit."""
    product: Series = {}
    for k1, v1 in left.items():
        if k1 > limit:
            continue
        for k2, v2 in right.items():
            key = k1 + k2
            if key > limit:
                continue
            product[key] = product.get(key, 0) + v1 * v2
    return product


def product(series: Iterable[Series], limit: Fraction) -> Series:
    result: Series = {Fraction(0): 1}
    for factor in series:
        result = convolve(result, factor, limit)
    return result
