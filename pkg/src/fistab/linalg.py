"""Exact linear algebra over the rationals.

Rank computations use fraction-free elimination on integer rows (each
reduction step is a cross-multiplication followed by a gcd division), so
injectivity and surjectivity verdicts are exact.  The dense solver works
over Fraction and reports inconsistency and free columns explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _normalize_int_row(row: list[int]) -> list[int] | None:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return None
    if g > 1:
        row = [x // g for x in row]
    lead = next(x for x in row if x)
    if lead < 0:
        row = [-x for x in row]
    return row


class IntRowBasis:
    """Incremental echelon basis for integer row vectors.

    Rows are kept integral: a candidate is reduced against each pivot row
    by cross-multiplication and re-normalized by its gcd, so no fractions
    ever appear.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector) -> list[int] | None:
        """Residue of vector modulo the current span, or None if it lies
        in the span (up to scaling)."""
        v = [int(x) for x in vector]
        if len(v) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(v)}")
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                a, b = row[p], v[p]
                v = [a * x - b * y for x, y in zip(v, row)]
        return _normalize_int_row(v)

    def insert(self, vector) -> bool:
        """Add vector to the span; True if it increased the rank."""
        residue = self.reduce(vector)
        if residue is None:
            return False
        self.rows.append(residue)
        self.pivots.append(next(i for i, x in enumerate(residue) if x))
        return True


def int_rank(rows) -> int:
    """Exact rank of a matrix given as an iterable of integer rows."""
    basis = None
    for row in rows:
        if basis is None:
            basis = IntRowBasis(len(row))
        basis.insert(row)
    return 0 if basis is None else basis.rank


def solve_exact(rows, rhs):
    """Solve A x = b over the rationals by Gaussian elimination.

    Returns (solution, free_columns, consistent).  When the system is
    consistent, free columns are assigned zero; `solution` is None when it
    is inconsistent.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    if not m:
        return [], [], True
    ncols = len(m[0]) - 1
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_of_col[c] = r
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None, [], False
    free = [c for c in range(ncols) if c not in pivot_of_col]
    solution = [Fraction(0)] * ncols
    for c, i in pivot_of_col.items():
        solution[c] = m[i][ncols]
    return solution, free, True


def mat_mul_columns(a_cols, b_cols):
    """Compose two linear maps given as lists of sparse columns
    ({row index: coefficient}); returns the columns of a o b."""
    out = []
    for col in b_cols:
        acc: dict[int, int] = {}
        for j, coeff in col.items():
            for i, entry in a_cols[j].items():
                val = acc.get(i, 0) + coeff * entry
                if val:
                    acc[i] = val
                else:
                    acc.pop(i, None)
        out.append(acc)
    return out


def columns_to_dense(cols, nrows):
    """Sparse columns to a dense row-major matrix of ints."""
    mat = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            mat[i][j] = v
    return mat
