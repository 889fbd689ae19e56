"""Exact dense linear algebra over the rationals.

Every entry is a ``fractions.Fraction``; no operation ever rounds.  The
elimination kernels are fraction-free: rows are scaled to primitive integer
vectors and combined by cross-multiplication, with a gcd reduction after
each step so intermediate integers stay small.  Pivoting always takes the
first nonzero entry in scan order, which makes ranks, kernels and reduced
forms reproducible bit for bit across platforms.

All matrices are immutable after construction and all functions are pure,
so everything here is safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows):
        data = tuple(tuple(_q(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self._rows = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def identity(cls, k: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        columns = [list(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(len(columns[0]))])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def row_list(self):
        return [list(r) for r in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other._rows))
            return Matrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self._rows
                ]
            )
        return Matrix([[x * _q(other) for x in row] for row in self._rows])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self._rows
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _primitive_int_row(row):
    """Scale a row of Fractions/ints to a primitive integer list (sign kept)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            d = x.denominator
            den = den // gcd(den, d) * d
    ints = [int(x * den) if isinstance(x, Fraction) else x * den for x in row]
    g = 0
    for x in ints:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _reduce_primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rank_rows(rows) -> int:
    """Rank of a list of coefficient rows (Fractions or ints), fraction-free."""
    work = [_primitive_int_row(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        a = prow[c]
        for i in range(rank + 1, len(work)):
            b = work[i][c]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                row = work[i]
                work[i] = _reduce_primitive(
                    [fa * x - fb * y for x, y in zip(row, prow)]
                )
        rank += 1
        if rank == len(work):
            break
    return rank


def _rref_rows(rows):
    """Reduced row echelon form over the rationals.

    Returns (pivot_columns, reduced_rows) where reduced_rows are tuples of
    Fractions with leading coefficient 1.  Elimination is done on primitive
    integer rows (Gauss-Jordan, first-nonzero pivot); only the final
    normalization divides.
    """
    work = [_primitive_int_row(r) for r in rows if any(r)]
    pivots = []
    if not work:
        return pivots, []
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        a = prow[c]
        for i in range(len(work)):
            if i == r:
                continue
            b = work[i][c]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                row = work[i]
                work[i] = _reduce_primitive(
                    [fa * x - fb * y for x, y in zip(row, prow)]
                )
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = []
    for k, c in enumerate(pivots):
        lead = work[k][c]
        reduced.append(tuple(Fraction(x, lead) for x in work[k]))
    return pivots, reduced


class EchelonSpan:
    """Incremental row span with exact fraction-free reduction.

    Rows are inserted one at a time; ``rank`` grows when a row is
    independent of the span so far.  Used for streaming rank computations
    where building the full matrix first would be wasteful.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows = []  # primitive int rows
        self._lead = []  # leading column of each stored row

    @property
    def rank(self) -> int:
        return len(self._rows)

    def insert(self, row) -> bool:
        """Reduce ``row`` against the span; store it if independent."""
        work = _primitive_int_row(row)
        for prow, lc in zip(self._rows, self._lead):
            b = work[lc]
            if b:
                a = prow[lc]
                g = gcd(a, b)
                fa, fb = a // g, b // g
                work = _reduce_primitive(
                    [fa * x - fb * y for x, y in zip(work, prow)]
                )
        lead = next((j for j, x in enumerate(work) if x), None)
        if lead is None:
            return False
        # keep rows ordered by leading column so later reductions stay cheap
        pos = 0
        while pos < len(self._lead) and self._lead[pos] < lead:
            pos += 1
        self._rows.insert(pos, work)
        self._lead.insert(pos, lead)
        return True


def rank(m: Matrix) -> int:
    """Exact rank over the rationals (deterministic fraction-free elimination)."""
    return _rank_rows(m.row_list())


def kernel_basis(m: Matrix):
    """Canonical basis of the right kernel of ``m``.

    One vector per free column, in column order; each vector is scaled so
    its first nonzero entry is 1.  Empty list iff ``m`` has full column
    rank.  Every returned v satisfies m v = 0 exactly.
    """
    pivots, reduced = _rref_rows(m.row_list())
    ncols = m.cols
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -reduced[k][fc]
        lead = next(x for x in v if x)
        if lead != 1:
            v = [x / lead for x in v]
        basis.append(tuple(v))
    return basis


def _det_cofactor(rows) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += sign * rows[0][j] * _det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss(rows) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = None
            for i in range(k + 1, n):
                if a[i][k]:
                    swap = i
                    break
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant; cofactor expansion for size <= 3, Bareiss above."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = m.row_list()
    if m.rows <= 3:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan on the augmented matrix."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [
        list(m.row(i)) + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return Matrix([row[n:] for row in aug])


def solve(m: Matrix, rhs):
    """One exact solution of m x = rhs, or None if inconsistent.

    Free variables are set to 0, so the answer is deterministic.  ``rhs``
    is a sequence of length m.rows.
    """
    rhs = [_q(x) for x in rhs]
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = [list(m.row(i)) + [rhs[i]] for i in range(m.rows)]
    pivots, reduced = _rref_rows(aug)
    ncols = m.cols
    sol = [Fraction(0)] * ncols
    for k, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the augmented column: inconsistent
        sol[pc] = reduced[k][ncols]
    return tuple(sol)
