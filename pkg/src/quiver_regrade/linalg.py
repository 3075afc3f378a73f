"""Exact dense linear algebra over the fields in :mod:`quiver_regrade.fields`.

Matrices are immutable row-major tuples of scalars.  Rank comes in two
independently coded routines:

* :func:`rank` - the primary one.  Over the rationals it runs fraction-free
  (integer cross-multiplication with gcd normalization, denominators cleared
  per row); over F_p it runs vectorized modular elimination.
* :func:`rank_naive` - a deliberately plain textbook Gaussian elimination
  with division, used as a second opinion in verification.  Keep it free of
  code shared with :func:`rank`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

from .fields import QQ, Field, PrimeField, Rationals, Scalar


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]
    field: Field

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"ragged row: expected {self.cols} columns")

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return Matrix(len(data), cols, data, field)

    @staticmethod
    def zero(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return Matrix(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)), field)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix(n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field)

    def get(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def mul(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})")
        f = self.field
        out = []
        for i in range(self.rows):
            left = self.entries[i]
            row = []
            for j in range(other.cols):
                acc = f.zero
                for k in range(self.cols):
                    acc = f.add(acc, f.mul(left[k], other.entries[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.rows, other.cols, tuple(out), f)

    def add(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(
            self.rows,
            self.cols,
            tuple(
                tuple(f.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            f,
        )

    def sub(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(
            self.rows,
            self.cols,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            f,
        )

    def scale(self, c: Scalar) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows,
            self.cols,
            tuple(tuple(f.mul(c, a) for a in row) for row in self.entries),
            f,
        )

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows, self.cols, tuple(tuple(f.neg(a) for a in row) for row in self.entries), f
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.field,
        )

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(a) for row in self.entries for a in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        f = self.field
        for i in range(self.rows):
            for j in range(self.cols):
                want = f.one if i == j else f.zero
                if self.entries[i][j] != want:
                    return False
        return True

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def _same_shape(self, other: "Matrix"):
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch: ({self.rows}x{self.cols}) vs ({other.rows}x{other.cols})"
            )

    def _same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")


# ---------------------------------------------------------------------------
# primary rank: fraction-free over Q, vectorized modular elimination over F_p


class FractionFreeEchelon:
    """Incremental integer echelon accumulator (rationals only).

    Rows are cleared of denominators, reduced against stored pivots by
    cross-multiplication, and gcd-normalized, so no fractions are formed
    during elimination.  Feeding rows one at a time allows early exit once
    full column rank is reached.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: list[tuple[int, list[int]]] = []  # (pivot column, integer row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_row(self, row: Sequence[Fraction]) -> bool:
        """Reduce one row into the accumulator; True if it increased the rank."""
        denom = lcm(*(fr.denominator for fr in row)) if row else 1
        ints = [int(fr * denom) for fr in row]
        for col, piv in self.pivots:
            if ints[col]:
                lead = piv[col]
                coef = ints[col]
                ints = [lead * a - coef * b for a, b in zip(ints, piv)]
        for col, val in enumerate(ints):
            if val:
                g = 0
                for a in ints:
                    g = gcd(g, a)
                if val < 0:
                    g = -g
                norm = [a // g for a in ints]
                self.pivots.append((col, norm))
                self.pivots.sort(key=lambda item: item[0])
                return True
        return False


def _rank_mod_p(rows: list[list[int]], ncols: int, p: int, stop_at: int | None = None) -> int:
    if not rows or ncols == 0:
        return 0
    a = np.array(rows, dtype=np.int64) % p
    nr = a.shape[0]
    r = 0
    for c in range(ncols):
        sub = a[r:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        r += 1
        if r == nr or (stop_at is not None and r >= stop_at):
            break
    return r


def rank_of_rows(
    field: Field, rows: Iterable[Sequence[Scalar]], ncols: int, stop_at: int | None = None
) -> int:
    """Rank of a row family, primary routine, early exit at ``stop_at``."""
    if isinstance(field, Rationals):
        acc = FractionFreeEchelon(ncols)
        limit = ncols if stop_at is None else min(ncols, stop_at)
        for row in rows:
            acc.add_row(row)
            if acc.rank >= limit:
                break
        return acc.rank
    assert isinstance(field, PrimeField)
    return _rank_mod_p([list(r) for r in rows], ncols, field.p, stop_at)


def rank(m: Matrix) -> int:
    return rank_of_rows(m.field, m.entries, m.cols)


def rank_naive(m: Matrix) -> int:
    """Second-opinion rank: plain Gaussian elimination with division."""
    f = m.field
    work = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if not f.is_zero(work[i][c]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = f.inv(work[r][c])
        work[r] = [f.mul(inv, a) for a in work[r]]
        for i in range(nr):
            if i != r and not f.is_zero(work[i][c]):
                coef = work[i][c]
                work[i] = [f.sub(a, f.mul(coef, b)) for a, b in zip(work[i], work[r])]
        r += 1
        if r == nr:
            break
    return r


# ---------------------------------------------------------------------------
# reduced row echelon form, nullspace, solving


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    f = m.field
    if isinstance(f, PrimeField):
        return _rref_mod_p(m)
    work = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if not f.is_zero(work[i][c]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = f.inv(work[r][c])
        work[r] = [f.mul(inv, a) for a in work[r]]
        for i in range(nr):
            if i != r and not f.is_zero(work[i][c]):
                coef = work[i][c]
                work[i] = [f.sub(a, f.mul(coef, b)) for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix.from_rows(f, work, nc), pivots


def _rref_mod_p(m: Matrix) -> tuple[Matrix, list[int]]:
    f = m.field
    assert isinstance(f, PrimeField)
    p = f.p
    nr, nc = m.rows, m.cols
    if nr == 0 or nc == 0:
        return m, []
    a = np.array([[int(x) for x in row] for row in m.entries], dtype=np.int64) % p
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        sub = a[r:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
        if r == nr:
            break
    rows = tuple(tuple(int(x) for x in row) for row in a)
    return Matrix(nr, nc, rows, f), pivots


def nullspace(m: Matrix) -> Matrix:
    """Columns form a basis of the right kernel {x : m x = 0}."""
    f = m.field
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    cols = []
    for fc in free:
        vec = [f.zero] * m.cols
        vec[fc] = f.one
        for r, pc in enumerate(pivots):
            vec[pc] = f.neg(red.entries[r][fc])
        cols.append(vec)
    entries = tuple(tuple(col[i] for col in cols) for i in range(m.cols))
    return Matrix(m.cols, len(cols), entries, f)


def solve_columns(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a X = b columnwise; None if any column is inconsistent."""
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve")
    f = a.field
    aug_rows = [tuple(a.entries[i]) + tuple(b.entries[i]) for i in range(a.rows)]
    aug = Matrix.from_rows(f, aug_rows, a.cols + b.cols) if a.rows else Matrix.zero(f, 0, a.cols + b.cols)
    red, pivots = rref(aug)
    for c in pivots:
        if c >= a.cols:
            return None
    sol = [[f.zero] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            sol[pc][j] = red.entries[r][a.cols + j]
    return Matrix.from_rows(f, sol, b.cols) if a.cols else Matrix.zero(f, 0, b.cols)


def column_space_complement(m: Matrix) -> tuple[Matrix, Matrix]:
    """For the subspace im(m) of k^n, return (projection q, section e).

    q: k^n -> k^c kills im(m); e: k^c -> k^n satisfies q e = id, so k^n is
    im(m) (+) im(e) and q represents the quotient map onto k^n / im(m).
    """
    f = m.field
    n = m.rows
    red, pivots = rref(m.transpose())
    basis_rows = [red.entries[r] for r in range(len(pivots))]
    pivot_cols = set(pivots)
    free = [c for c in range(n) if c not in pivot_cols]
    # reduce each standard basis vector against the reduced basis rows; the
    # residue lives on the free coordinates and gives the quotient map
    q = [[f.zero] * n for _ in range(len(free))]
    for i in range(n):
        vec = [f.zero] * n
        vec[i] = f.one
        for r, pc in enumerate(pivots):
            coef = vec[pc]
            if not f.is_zero(coef):
                vec = [f.sub(a, f.mul(coef, b)) for a, b in zip(vec, basis_rows[r])]
        for k, c in enumerate(free):
            q[k][i] = vec[c]
    e = [[f.one if free[k] == i else f.zero for k in range(len(free))] for i in range(n)]
    q_m = Matrix.from_rows(f, q, n) if free else Matrix.zero(f, 0, n)
    e_m = Matrix.from_rows(f, e, len(free)) if n else Matrix.zero(f, 0, len(free))
    return q_m, e_m
