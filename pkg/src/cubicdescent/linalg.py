"""Exact dense linear algebra over the rationals.

Matrices are immutable with Fraction entries.  Elimination runs
fraction-free (Bareiss) on integer-rescaled rows, so intermediate values
stay integral and are bounded by minors of the input.  Pivoting is
deterministic: for every column we take the first usable row in top-down
scan order, which makes all derived canonical choices reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import NonSquareMatrixError, SingularMatrixError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_frac(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def diagonal(cls, values) -> "Matrix":
        values = list(values)
        n = len(values)
        return cls(n, n, [_frac(values[i]) if i == j else Fraction(0)
                          for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self._e[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix(self.rows, self.cols, [c * a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other._e[k * other.cols + j]
                               for k in range(self.cols)))
        return Matrix(self.rows, other.cols, out)

    def mul_vec(self, v) -> tuple:
        v = [_frac(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum(self.row(i)[k] * v[k] for k in range(self.cols))
                     for i in range(self.rows))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NonSquareMatrixError("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self._e == other._e)

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i))
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _integer_rows(m: Matrix):
    """Rescale each row to integers; return (rows, multipliers).

    Row i of the result equals multipliers[i] * (row i of m), with every
    entry an int.
    """
    rows, mults = [], []
    for i in range(m.rows):
        r = m.row(i)
        d = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * d) for x in r])
        mults.append(d)
    return rows, mults


def _bareiss_echelon(rows):
    """In-place fraction-free row echelon form of an integer matrix.

    Returns (pivots, sign) where pivots is a list of (row, col) pivot
    positions and sign tracks row swaps.  Pivot choice: for each column,
    the first row (top-down) with a nonzero entry.
    """
    if not rows:
        return [], 1
    n, m = len(rows), len(rows[0])
    pivots = []
    sign = 1
    prev = 1
    pr = 0
    for pc in range(m):
        if pr >= n:
            break
        pivot_row = None
        for i in range(pr, n):
            if rows[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            sign = -sign
        piv = rows[pr][pc]
        for i in range(pr + 1, n):
            if all(x == 0 for x in rows[i]):
                continue
            for j in range(m):
                if j == pc:
                    continue
                rows[i][j] = (piv * rows[i][j] - rows[i][pc] * rows[pr][j]) // prev
            rows[i][pc] = 0
        prev = piv
        pivots.append((pr, pc))
        pr += 1
    return pivots, sign


def det(m: Matrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise NonSquareMatrixError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows, mults = _integer_rows(m)
    pivots, sign = _bareiss_echelon(rows)
    if len(pivots) < n:
        return Fraction(0)
    d = rows[n - 1][pivots[n - 1][1]]
    scale = 1
    for x in mults:
        scale *= x
    return Fraction(sign * d, scale)


def rank(m: Matrix) -> int:
    """Rank over the rationals via fraction-free elimination."""
    rows, _ = _integer_rows(m)
    pivots, _ = _bareiss_echelon(rows)
    return len(pivots)


def charpoly(m: Matrix):
    """Monic characteristic polynomial det(T*I - m), exact.

    Faddeev-LeVerrier recursion; divisions by 1..n are exact over Q.
    """
    from .unipoly import UniPoly

    if m.rows != m.cols:
        raise NonSquareMatrixError("charpoly of non-square matrix")
    n = m.rows
    coeffs = [Fraction(1)]          # leading coefficient of T^n
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m @ mk
        ck = -am.trace() / k
        coeffs.append(ck)
        if k < n:
            mk = am + Matrix.identity(n).scale(ck)
    return UniPoly(list(reversed(coeffs)))


def solve_linear(m: Matrix, rhs) -> list | None:
    """One exact solution of m*x = rhs, or None if inconsistent.

    Underdetermined systems get the canonical solution with all free
    variables (non-pivot columns under deterministic elimination) set to 0.
    """
    rhs = [_frac(x) for x in rhs]
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    aug = Matrix(m.rows, m.cols + 1,
                 [x for i in range(m.rows) for x in (*m.row(i), rhs[i])])
    rows, _ = _integer_rows(aug)
    pivots, _ = _bareiss_echelon(rows)
    # A pivot in the rhs column means inconsistency.
    for (_, pc) in pivots:
        if pc == m.cols:
            return None
    sol = [Fraction(0)] * m.cols
    for (pr, pc) in reversed(pivots):
        s = Fraction(rows[pr][m.cols])
        for j in range(pc + 1, m.cols):
            if rows[pr][j]:
                s -= rows[pr][j] * sol[j]
        sol[pc] = s / rows[pr][pc]
    return sol


def nullspace(m: Matrix) -> list:
    """Basis of the right kernel, canonical under deterministic pivoting.

    Each basis vector has one free variable set to 1 and the remaining
    free variables set to 0, then is cleared of denominators and sign
    normalized (first nonzero entry positive).
    """
    rows, _ = _integer_rows(m)
    pivots, _ = _bareiss_echelon(rows)
    pivot_cols = [pc for (_, pc) in pivots]
    free_cols = [j for j in range(m.cols) if j not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for (pr, pc) in reversed(pivots):
            s = Fraction(0)
            for j in range(pc + 1, m.cols):
                if rows[pr][j] and v[j]:
                    s -= rows[pr][j] * v[j]
            v[pc] = s / rows[pr][pc]
        d = lcm(*(x.denominator for x in v))
        w = [int(x * d) for x in v]
        g = 0
        for x in w:
            g = gcd_int(g, x)
        if g:
            w = [x // g for x in w]
        for x in w:
            if x:
                if x < 0:
                    w = [-y for y in w]
                break
        basis.append(tuple(w))
    return basis


def gcd_int(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when det = 0."""
    if m.rows != m.cols:
        raise NonSquareMatrixError("inverse of non-square matrix")
    n = m.rows
    if rank(m) < n:
        raise SingularMatrixError("matrix is singular")
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(solve_linear(m, e))
    return Matrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])
