"""Exact rational linear algebra.

Every dimension count in the package goes through :func:`rank` or
:func:`kernel_basis`. Scalars are :class:`fractions.Fraction`; matrices are
immutable :class:`RationalMatrix` values. Rank is computed with fraction-free
(Bareiss) elimination on integer rows, so no rational is ever normalised inside
the inner loop.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InputError, NumericalRangeError

Rational = Fraction
Scalar = Union[int, Fraction, str]


def as_rational(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` literal to a Fraction.

    Floats are refused: they would smuggle rounding into exact verdicts.
    """
    if isinstance(value, bool):
        raise InputError(f"booleans are not rational scalars: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {value!r}") from exc
    raise InputError(f"unsupported scalar type {type(value).__name__}: {value!r}")


class RationalMatrix:
    """Dense immutable matrix over Q, stored row-major."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        for i, row in enumerate(data):
            if len(row) != cols:
                raise InputError(f"row {i} has {len(row)} entries, expected {cols}")
        self._rows = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int | None = None) -> RationalMatrix:
        if not columns:
            return cls([[] for _ in range(rows or 0)], cols=0)
        return cls(zip(*columns), cols=len(columns))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._rows for x in row)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> RationalMatrix:
        if self.rows == 0:
            return RationalMatrix([[] for _ in range(self.cols)], cols=0)
        return RationalMatrix(zip(*self._rows), cols=self.rows)

    def select_rows(self, indices: Iterable[int]) -> RationalMatrix:
        return RationalMatrix((self._rows[i] for i in indices), cols=self.cols)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return RationalMatrix(
            ([sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self._rows),
            cols=other.cols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def _check_nonempty(M: RationalMatrix) -> None:
    if M.rows == 0 or M.cols == 0:
        raise InputError(f"empty matrix of shape {M.shape}")


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    # Scaling a row by a nonzero constant preserves rank.
    out = []
    for row in rows:
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (den // x.denominator) for x in row])
    return out


def bareiss_rank(a: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix by in-place fraction-free elimination.

    Pivot is the entry of largest absolute value in the current column,
    ties broken by lowest row index. ``a`` is destroyed.
    """
    m = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        best, best_abs = -1, 0
        for i in range(r, m):
            v = abs(a[i][c])
            if v > best_abs:
                best, best_abs = i, v
        if best < 0:
            continue
        if best != r:
            a[r], a[best] = a[best], a[r]
        prow = a[r]
        p = prow[c]
        tail = range(c + 1, ncols)
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            if f:
                for j in tail:
                    row[j] = (p * row[j] - f * prow[j]) // prev
            elif prev == 1:
                for j in tail:
                    row[j] = p * row[j]
            else:
                for j in tail:
                    row[j] = p * row[j] // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    if m > n:
        a = [list(col) for col in zip(*rows)]
        m, n = n, m
    else:
        a = [list(row) for row in rows]
    return bareiss_rank(a, n)


def rank(M: RationalMatrix) -> int:
    """Exact rank over Q."""
    _check_nonempty(M)
    rows = list(M)
    if M.rows > M.cols:
        rows = list(zip(*rows))
    a = _integer_rows(rows)
    return bareiss_rank(a, len(a[0]))


def rank_of_rows(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a list of rational vectors, 0 for an empty list."""
    if not rows:
        return 0
    return rank(RationalMatrix(rows))


def rref(M: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, computed over Fractions."""
    a = M.tolist()
    m, n = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel_basis(M: RationalMatrix) -> RationalMatrix:
    """Basis of the right null space, one basis vector per column.

    Free variable ``k`` contributes the vector with a 1 in slot ``k`` and the
    back-substituted pivot values elsewhere.
    """
    _check_nonempty(M)
    reduced, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for k in free:
        v = [Fraction(0)] * M.cols
        v[k] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[k]
        basis.append(v)
    return RationalMatrix.from_columns(basis, rows=M.cols)


def to_float_array(M: RationalMatrix) -> np.ndarray:
    out = np.empty(M.shape, dtype=float)
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            try:
                v = float(x)
            except OverflowError as exc:
                raise NumericalRangeError(f"entry ({i},{j}) exceeds float range") from exc
            if not math.isfinite(v):
                raise NumericalRangeError(f"entry ({i},{j}) exceeds float range")
            out[i, j] = v
    return out


def rank_float(M: RationalMatrix, tol: float = 1e-8) -> int:
    """Numerical rank: singular values above ``tol`` times the largest one.

    Diagnostic only; verdicts never depend on it.
    """
    if not tol > 0:
        raise InputError(f"tol must be positive, got {tol}")
    _check_nonempty(M)
    s = np.linalg.svd(to_float_array(M), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))
