"""
Krawtchouk - Binary Krawtchouk Polynomials and p-Exterior Traces

K_p^n(x) = Σ_t (−1)^t C(x,t) C(n−x, p−t) is the trace of the p-th exterior
power of a diagonal ±1 matrix with x entries equal to −1. For general
point parts the trace is read off det(Id + tB).
"""

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from core.exceptions import DomainViolation
from core.polynomials import exterior_traces


def _check_range(n: int, p: int, x: int) -> None:
    if n < 0 or not 0 <= p <= n or not 0 <= x <= n:
        raise DomainViolation(f"Krawtchouk arguments out of range: n={n}, p={p}, x={x}")


def krawtchouk(n: int, p: int, x: int) -> int:
    """
    Exact value of K_p^n(x).

    Args:
        n: Dimension.
        p: Degree, 0 ≤ p ≤ n.
        x: Number of −1 eigenvalues, 0 ≤ x ≤ n.
    """
    _check_range(n, p, x)
    return sum((-1) ** t * comb(x, t) * comb(n - x, p - t) for t in range(0, min(x, p) + 1))


@dataclass
class KrawtchoukTable:
    """Memoized K_p^n(x) values for a fixed n."""
    n: int
    values: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def value(self, p: int, x: int) -> int:
        key = (p, x)
        if key not in self.values:
            self.values[key] = krawtchouk(self.n, p, x)
        return self.values[key]

    def row(self, x: int) -> List[int]:
        return [self.value(p, x) for p in range(self.n + 1)]

    def generating_identity_holds(self, x: int) -> bool:
        """Σ_p K_p^n(x) t^p = (1−t)^x (1+t)^{n−x}, compared coefficientwise."""
        expected = [0] * (self.n + 1)
        for i in range(x + 1):
            for j in range(self.n - x + 1):
                expected[i + j] += (-1) ** i * comb(x, i) * comb(self.n - x, j)
        return self.row(x) == expected


def integral_roots(n: int, p: int) -> List[int]:
    """All x in [0, n] with K_p^n(x) = 0, ascending."""
    _check_range(n, p, 0)
    return [x for x in range(n + 1) if krawtchouk(n, p, x) == 0]


def trace_p(point, p: int) -> int:
    """
    Trace of the p-th exterior power of a point isometry.

    Args:
        point: PointIsometry (or anything exposing .matrix).
        p: Form degree, 0 ≤ p ≤ n.
    """
    traces = exterior_traces(point.matrix)
    if not 0 <= p < len(traces):
        raise DomainViolation(f"Form degree {p} outside 0..{len(traces) - 1}")
    return traces[p]


def trace_vector(point) -> Tuple[int, ...]:
    """(tr_0(B), ..., tr_n(B))."""
    return exterior_traces(point.matrix)
