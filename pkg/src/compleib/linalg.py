"""Exact dense linear algebra over the rationals.

Rank, kernel bases and linear solves for dense matrices of
``fractions.Fraction`` entries, computed by exact Gauss-Jordan elimination.
There is no floating point anywhere, so every returned relation (``m @ v = 0``,
``m @ x = b``) is an identity, not an approximation.  Problem sizes in this
package are small (a few hundred rows at most), so dense storage wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [tuple(_frac(x) for x in r) for r in rows]
        if not rows:
            return cls.zeros(0, 0)
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("rows have unequal lengths")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [tuple(_frac(x) for x in c) for c in columns]
        if not columns:
            if rows is None:
                raise ValueError("need an explicit row count for a matrix with no columns")
            return cls.zeros(rows, 0)
        nrows = len(columns[0])
        if rows is not None and rows != nrows:
            raise ValueError("row count does not match column length")
        if any(len(c) != nrows for c in columns):
            raise ValueError("columns have unequal lengths")
        return cls(nrows, len(columns),
                   tuple(columns[j][i] for i in range(nrows) for j in range(len(columns))))

    def at(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        v = [_frac(x) for x in v]
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = _ZERO
            for j, x in enumerate(v):
                if x:
                    acc += self.entries[base + j] * x
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def _eliminate(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    """Rank over the rationals."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    _, pivots = _eliminate(rows, m.cols)
    return len(pivots)


def kernel_basis(m: Matrix) -> list[Vector]:
    """A basis of the right kernel {v : m @ v = 0}, one vector per free column.

    Vectors come out in ascending free-column order, with a 1 in the free
    coordinate, so the result is deterministic.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    rref, pivots = _eliminate(rows, m.cols)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[free] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -rref[r][free]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some x with m @ x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side length {len(b)} != rows {m.rows}")
    aug = [list(m.row(i)) + [_frac(b[i])] for i in range(m.rows)]
    rref, pivots = _eliminate(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [_ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rref[r][m.cols]
    return tuple(x)
