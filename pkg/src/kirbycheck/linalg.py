"""Exact integer matrices, Smith normal form, and abelian group invariants.

Everything here runs on arbitrary-precision Python ints; no floating
point is used anywhere.  Matrices are immutable.  Rows act as relations
on column generators throughout: ``cokernel(M)`` is Z^cols / rowspan(M).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class IntegerMatrix:
    """Immutable matrix of exact integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence[int]], cols: int | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} but rows have width {width}")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of bounds for {self.rows}x{self.cols}")
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        return IntegerMatrix(
            [
                [
                    sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def stack_rows(self, extra: Iterable[Sequence[int]]) -> "IntegerMatrix":
        return IntegerMatrix(list(self.entries) + [list(r) for r in extra], cols=self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.entries == other.entries and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.entries, self.cols))

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self.entries]!r})"

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot is None:
                    return 0
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``torsion`` is the tuple of invariant factors d_i >= 2 with d_i | d_{i+1};
    the canonical form of a group is unique, so equality is structural.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {a}, {b} break the divisibility chain")

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int], ambient: int) -> "AbelianGroup":
        """Group presented on ``ambient`` generators with diagonal relations."""
        nonzero = [abs(d) for d in diagonal if d != 0]
        return cls(ambient - len(nonzero), tuple(d for d in nonzero if d != 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = AbelianGroup(0)
Z = AbelianGroup(1)


def smith_normal_form(
    matrix: IntegerMatrix,
) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return (U, D, V) with U * matrix * V = D.

    U and V are unimodular; D is diagonal with d_i >= 0 and d_i | d_{i+1}.
    Pivoting always takes the smallest nonzero absolute value, ties broken
    by lowest (row, col), so the sequence of operations is deterministic.
    """
    m, n = matrix.rows, matrix.cols
    a = [list(r) for r in matrix.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                val = abs(a[i][j])
                if val and (best is None or val < best[0]):
                    best = (val, i, j)
        return best

    t = 0
    while t < min(m, n):
        found = find_pivot(t)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            # Reduce the pivot column, then the pivot row.  If a remainder
            # survives it is strictly smaller than the pivot, so promote it.
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # Pivot divides the remaining block, or we fold a bad row in.
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        t += 1

    d = IntegerMatrix(a, cols=n)
    return IntegerMatrix(u, cols=m), d, IntegerMatrix(v, cols=n)


def smith_diagonal(matrix: IntegerMatrix) -> list[int]:
    _, d, _ = smith_normal_form(matrix)
    return [d[i, i] for i in range(min(d.rows, d.cols))]


def rank(matrix: IntegerMatrix) -> int:
    return sum(1 for x in smith_diagonal(matrix) if x != 0)


def kernel_rank(matrix: IntegerMatrix) -> int:
    """Rank of the integer kernel of the rows-as-relations map Z^rows -> Z^cols."""
    return matrix.rows - rank(matrix)


def cokernel(matrix: IntegerMatrix) -> AbelianGroup:
    """Z^cols modulo the subgroup spanned by the rows."""
    return AbelianGroup.from_diagonal(smith_diagonal(matrix), matrix.cols)


def generates_cokernel(matrix: IntegerMatrix, vector: Sequence[int]) -> bool:
    """True when ``vector`` generates cokernel(matrix) on its own.

    Adjoining the vector as one more relation must kill the whole quotient.
    """
    if len(vector) != matrix.cols:
        raise ValueError("vector length must match column count")
    return cokernel(matrix.stack_rows([vector])).is_trivial


def is_unimodular(matrix: IntegerMatrix) -> bool:
    return matrix.rows == matrix.cols and abs(matrix.determinant()) == 1


def gcd_many(values: Iterable[int]) -> int:
    out = 0
    for v in values:
        out = gcd(out, v)
    return out
