"""
Rational Matrix - Exact Linear Algebra over the Rationals

All geometry in the library is carried in lattice coordinates with
Fraction entries: Gram matrices, point parts, projectors and translation
vectors. Vectors are plain tuples of Fractions; matrices are immutable
RationalMatrix values.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from .exceptions import NonPositiveDefiniteGram

Scalar = Union[int, Fraction, str]
RationalVector = Tuple[Fraction, ...]


def parse_rational(value: Scalar) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string into a reduced Fraction.

    Args:
        value: Integer, Fraction, or string such as "1/2", "-3" or "0".

    Returns:
        The exact rational value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"Boolean {value!r} is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational literal")
        parts = text.split('/')
        if len(parts) > 2:
            raise ValueError(f"Malformed rational literal '{value}'")
        try:
            numerator = int(parts[0])
            denominator = int(parts[1]) if len(parts) == 2 else 1
        except ValueError:
            raise ValueError(f"Malformed rational literal '{value}'") from None
        if denominator == 0:
            raise ValueError(f"Zero denominator in '{value}'")
        return Fraction(numerator, denominator)
    raise TypeError(f"Cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as 'p/q', or 'p' when integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(entries: Iterable[Scalar]) -> RationalVector:
    return tuple(parse_rational(e) for e in entries)


def zero_vector(n: int) -> RationalVector:
    return (Fraction(0),) * n


def unit_vector(n: int, index: int, scale: Scalar = 1) -> RationalVector:
    entries = [Fraction(0)] * n
    entries[index] = parse_rational(scale)
    return tuple(entries)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVector:
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVector:
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(k: Scalar, v: Sequence[Fraction]) -> RationalVector:
    k = parse_rational(k)
    return tuple(k * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_integral_vector(v: Sequence[Fraction]) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def reduce_mod_lattice(v: Sequence[Fraction]) -> RationalVector:
    """Canonical representative of v mod Z^n with entries in [0, 1)."""
    return tuple(Fraction(a) - (Fraction(a).numerator // Fraction(a).denominator) for a in v)


def common_denominator(v: Iterable[Fraction]) -> int:
    q = 1
    for a in v:
        d = Fraction(a).denominator
        q = q * d // gcd(q, d)
    return q


class RationalMatrix:
    """
    Immutable dense matrix with Fraction entries.

    Rows are stored as a tuple of tuples. Arithmetic returns new matrices;
    the `@` operator accepts matrices and plain vectors.
    """

    __slots__ = ('_rows', '_shape')

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        materialized = tuple(tuple(parse_rational(e) for e in row) for row in rows)
        ncols = len(materialized[0]) if materialized else 0
        for index, row in enumerate(materialized):
            if len(row) != ncols:
                raise ValueError(
                    f"Row {index} has {len(row)} entries, expected {ncols}"
                )
        self._rows = materialized
        self._shape = (len(materialized), ncols)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> 'RationalMatrix':
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'RationalMatrix':
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries: Sequence[Scalar]) -> 'RationalMatrix':
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> 'RationalMatrix':
        if not columns:
            raise ValueError("At least one column is required")
        return cls(zip(*columns))

    @classmethod
    def block_diagonal(cls, blocks: Sequence['RationalMatrix']) -> 'RationalMatrix':
        n = sum(block.nrows for block in blocks)
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in blocks:
            for i in range(block.nrows):
                for j in range(block.ncols):
                    rows[offset + i][offset + j] = block[i, j]
            offset += block.nrows
        return cls(rows)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def rows(self) -> Tuple[RationalVector, ...]:
        return self._rows

    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> RationalVector:
        return self._rows[i]

    def column(self, j: int) -> RationalVector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> List[RationalVector]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = '; '.join(' '.join(format_rational(e) for e in row) for row in self._rows)
        return f"RationalMatrix([{body}])"

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
            other_columns = other.columns()
            return RationalMatrix(
                [[dot(row, col) for col in other_columns] for row in self._rows]
            )
        if len(other) != self.ncols:
            raise ValueError(f"Shape mismatch {self.shape} @ vector of length {len(other)}")
        return tuple(dot(row, other) for row in self._rows)

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> 'RationalMatrix':
        return RationalMatrix([[-a for a in row] for row in self._rows])

    def scale(self, k: Scalar) -> 'RationalMatrix':
        k = parse_rational(k)
        return RationalMatrix([[k * a for a in row] for row in self._rows])

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(zip(*self._rows)) if self.nrows else RationalMatrix([])

    def _check_same_shape(self, other: 'RationalMatrix') -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for row in self._rows for e in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows) for j in range(i)
        )

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.nrows) if self.is_square() else False

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == 0
            for i in range(self.nrows) for j in range(self.ncols) if i != j
        )

    def is_positive_definite(self) -> bool:
        """Exact test: symmetric with all LDL pivots strictly positive."""
        if not self.is_symmetric():
            return False
        try:
            ldl_decomposition(self)
        except NonPositiveDefiniteGram:
            return False
        return True

    # ------------------------------------------------------------------
    # Elimination-based operations
    # ------------------------------------------------------------------

    def determinant(self) -> Fraction:
        if not self.is_square():
            raise ValueError(f"Determinant of non-square matrix {self.shape}")
        a = [list(row) for row in self._rows]
        n = self.nrows
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            for r in range(col + 1, n):
                factor = a[r][col] / a[col][col]
                if factor:
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return det

    def rank(self) -> int:
        return len(_row_echelon(self._rows, self.ncols)[1])

    def inverse(self) -> 'RationalMatrix':
        if not self.is_square():
            raise ValueError(f"Inverse of non-square matrix {self.shape}")
        n = self.nrows
        augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)]
                     for i, row in enumerate(self._rows)]
        reduced, pivots = _row_echelon(augmented, n)
        if len(pivots) < n:
            raise ValueError("Matrix is singular")
        return RationalMatrix([row[n:] for row in reduced[:n]])

    def solve(self, rhs: Sequence[Scalar]) -> RationalVector:
        """
        One exact solution of self @ x = rhs (free variables set to zero).

        Raises:
            ValueError: if the system is inconsistent.
        """
        rhs = vector(rhs)
        if len(rhs) != self.nrows:
            raise ValueError(f"Right side has length {len(rhs)}, expected {self.nrows}")
        augmented = [list(row) + [b] for row, b in zip(self._rows, rhs)]
        reduced, pivots = _row_echelon(augmented, self.ncols)
        for row in reduced[len(pivots):]:
            if row[-1] != 0:
                raise ValueError("Linear system is inconsistent")
        solution = [Fraction(0)] * self.ncols
        for r, c in enumerate(pivots):
            solution[c] = reduced[r][-1]
        return tuple(solution)

    def nullspace(self) -> List[RationalVector]:
        """Rational basis of the right kernel (reduced echelon convention)."""
        reduced, pivots = _row_echelon(self._rows, self.ncols)
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -reduced[r][f]
            basis.append(tuple(v))
        return basis

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    def to_int_rows(self) -> List[List[int]]:
        if not self.is_integral():
            raise ValueError("Matrix has non-integral entries")
        return [[int(e) for e in row] for row in self._rows]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(
            [[sympy.Rational(e.numerator, e.denominator) for e in row] for row in self._rows]
        )

    def to_float_rows(self) -> List[List[float]]:
        return [[float(e) for e in row] for row in self._rows]


def _row_echelon(rows: Sequence[Sequence[Fraction]],
                 pivot_columns: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form, pivoting only within the first pivot_columns."""
    a = [list(row) for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(pivot_columns):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def ldl_decomposition(gram: RationalMatrix) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """
    Rational LDLᵀ decomposition of a symmetric positive definite matrix.

    Returns (mu, d) with the quadratic form written as
    xᵀ G x = Σ_i d[i] * (x_i + Σ_{j>i} mu[i][j] * x_j)².

    Raises:
        NonPositiveDefiniteGram: when a pivot is not strictly positive.
    """
    if not gram.is_symmetric():
        raise NonPositiveDefiniteGram("Gram matrix is not symmetric")
    n = gram.nrows
    mu = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    a = [list(row) for row in gram.rows]
    for i in range(n):
        pivot = a[i][i]
        if pivot <= 0:
            raise NonPositiveDefiniteGram(f"Gram matrix is not positive definite (pivot {i})")
        d[i] = pivot
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / pivot
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= a[i][j] * a[i][k] / pivot
    return mu, d


def quadratic_form(gram: RationalMatrix, u: Sequence[Fraction],
                   v: Optional[Sequence[Fraction]] = None) -> Fraction:
    """Exact bilinear value uᵀ G v (v defaults to u)."""
    if v is None:
        v = u
    return dot(u, gram @ tuple(v))
