# src/core/matrix.py
"""Matrices of polynomials: Jacobians, minors (Laplace with memo), Pfaffians."""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from src.core.errors import DegenerateInputError, RingMismatchError
from src.core.polynomial import Polynomial
from src.core.ring import RingDescriptor

logger = logging.getLogger(__name__)


class PolyMatrix:
    """rows x cols matrix, entries stored row-major. ``cols == 0`` encodes an empty presentation."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingDescriptor, rows: int, cols: int, entries: Sequence[Polynomial]):
        ring = ring.base
        if rows < 0 or cols < 0:
            raise DegenerateInputError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise DegenerateInputError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.ring != ring:
                raise RingMismatchError("matrix entry from a different ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, ring: RingDescriptor, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DegenerateInputError("ragged matrix rows")
        return cls(ring, nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, ring: RingDescriptor, nrows: int, columns: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        ncols = len(columns)
        if any(len(c) != nrows for c in columns):
            raise DegenerateInputError("column length does not match the row count")
        return cls(ring, nrows, ncols, [columns[j][i] for i in range(nrows) for j in range(ncols)])

    def __getitem__(self, pos: tuple[int, int]) -> Polynomial:
        i, j = pos
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Polynomial]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[Polynomial]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        for i in range(self.rows):
            if self[i, i]:
                return False
            for j in range(i + 1, self.cols):
                if self[i, j] + self[j, i]:
                    return False
        return True

    def left_multiply(self, vector: Sequence[Polynomial]) -> list[Polynomial]:
        """vector (as a row) times self."""
        if len(vector) != self.rows:
            raise DegenerateInputError("row vector length does not match the matrix")
        out = []
        for j in range(self.cols):
            acc = Polynomial.zero(self.ring)
            for i in range(self.rows):
                if vector[i] and self[i, j]:
                    acc = acc + vector[i] * self[i, j]
            out.append(acc)
        return out

    def determinant(self) -> Polynomial:
        if not self.is_square():
            raise DegenerateInputError("determinant of a non-square matrix")
        if self.rows == 0:
            return Polynomial.one(self.ring)
        det = _minor_evaluator(self)
        return det(tuple(range(self.rows)), tuple(range(self.cols)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.ring, self.rows, self.cols, self.entries) == (other.ring, other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)) + "]"

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, {self})"


def _minor_evaluator(M: PolyMatrix):
    """Memoised Laplace expansion along the first listed row; shared across minors of one matrix."""

    @lru_cache(maxsize=None)
    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return M[rows[0], cols[0]]
        first, rest = rows[0], rows[1:]
        total = Polynomial.zero(M.ring)
        for k, c in enumerate(cols):
            entry = M[first, c]
            if not entry:
                continue
            sub = det(rest, cols[:k] + cols[k + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total - term if k % 2 else total + term
        return total

    return det


# --- 矩阵运算 ---
def jacobian_matrix(gens: Sequence[Polynomial], ring: RingDescriptor | None = None) -> PolyMatrix:
    """(#vars x #gens) matrix; column j is the gradient of gens[j]."""
    if not gens and ring is None:
        raise DegenerateInputError("jacobian_matrix needs at least one generator or an explicit ring")
    ring = (ring or gens[0].ring).base
    ring.require_char_zero("Jacobian matrix")
    columns = [[g.derivative(v) for v in ring.variables] for g in gens]
    return PolyMatrix.from_columns(ring, ring.nvars, columns)


def minors(M: PolyMatrix, r: int) -> list[Polynomial]:
    """All nonzero r x r minors (duplicates kept), rows/cols in lexicographic combination order."""
    if r < 1 or r > min(M.rows, M.cols):
        raise DegenerateInputError(f"minor size {r} out of range for a {M.rows}x{M.cols} matrix")
    det = _minor_evaluator(M)
    out = []
    for rows in combinations(range(M.rows), r):
        for cols in combinations(range(M.cols), r):
            value = det(rows, cols)
            if value:
                out.append(value)
    logger.debug(f"{r}x{r} minors of a {M.rows}x{M.cols} matrix: {len(out)} nonzero")
    return out


def pfaffians(M: PolyMatrix, size: int) -> list[Polynomial]:
    """Pfaffians of all size x size principal submatrices of a skew-symmetric M (zeros dropped)."""
    if size <= 0 or size % 2:
        raise DegenerateInputError(f"Pfaffian size must be even and positive, got {size}")
    if not M.is_skew_symmetric():
        raise DegenerateInputError("pfaffians need a skew-symmetric matrix with zero diagonal")
    if size > M.rows:
        raise DegenerateInputError(f"Pfaffian size {size} exceeds matrix size {M.rows}")

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return Polynomial.one(M.ring)
        first = idx[0]
        total = Polynomial.zero(M.ring)
        # 沿第一行展开: sum_j (-1)^j a_{1j} pf(去掉 1, j)
        for k in range(1, len(idx)):
            entry = M[first, idx[k]]
            if not entry:
                continue
            sub = pf(idx[1:k] + idx[k + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total - term if (k - 1) % 2 else total + term
        return total

    out = []
    for idx in combinations(range(M.rows), size):
        value = pf(idx)
        if value:
            out.append(value)
    return out
