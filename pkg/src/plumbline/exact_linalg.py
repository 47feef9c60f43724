"""Exact dense linear algebra over the integers and the rationals.

Everything in this module is exact: integer matrices hold arbitrary-precision
Python ints, rational matrices hold ``fractions.Fraction`` values (always in
lowest terms with positive denominator). No floating point is used anywhere.

The entry points are Smith normal form (``snf``), rank and kernel dimension
over the rationals (``rank``, ``kernel_dim``), cokernel invariants of an
integer matrix (``cokernel``), and an exact determinant (``det``). Rank is
computed by fraction-free (Bareiss) elimination after scaling each row to
integers, which keeps intermediate entries bounded by minors of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "SnfResult",
    "snf",
    "rank",
    "kernel_dim",
    "cokernel",
    "det",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(data: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        flat: list[int] = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in row)
        return IntMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        flat: list[int] = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                flat.append(sum(left[k] * other.entries[k * other.cols + j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(flat))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_rational(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(Fraction(x) for x in self.entries))

    def to_json(self) -> dict:
        """Serialize as ``{"rows", "cols", "entries"}`` with decimal strings."""
        return {"rows": self.rows, "cols": self.cols, "entries": [str(x) for x in self.entries]}


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense rational matrix, row-major.

    Entries are ``Fraction`` values, which are reduced with positive
    denominator by construction.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(data: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        flat: list[Fraction] = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(x) for x in row)
        return RatMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        flat: list[Fraction] = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                flat.append(sum((left[k] * other.entries[k * other.cols + j] for k in range(self.cols)), Fraction(0)))
        return RatMatrix(self.rows, other.cols, tuple(flat))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_json(self) -> dict:
        """Serialize as ``{"rows", "cols", "entries"}``; entries are "p" or "p/q"."""
        return {"rows": self.rows, "cols": self.cols, "entries": [_fraction_str(x) for x in self.entries]}


def _fraction_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``u @ a @ v == s`` with unimodular ``u`` and ``v``.

    ``s`` is diagonal with nonnegative entries d_1 | d_2 | ... ; zero entries
    come last.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.s[i, i] for i in range(min(self.s.rows, self.s.cols)))


def _identity_lists(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _row_axpy(mat: list[list[int]], dst: int, src: int, c: int) -> None:
    # mat[dst] += c * mat[src]
    row_d, row_s = mat[dst], mat[src]
    for j in range(len(row_d)):
        row_d[j] += c * row_s[j]


def _col_axpy(mat: list[list[int]], dst: int, src: int, c: int) -> None:
    for row in mat:
        row[dst] += c * row[src]


def _swap_cols(mat: list[list[int]], j1: int, j2: int) -> None:
    for row in mat:
        row[j1], row[j2] = row[j2], row[j1]


def _bring_pivot(s, u, v, t: int, nr: int, nc: int) -> bool:
    """Move a least-|value| nonzero entry of s[t:, t:] to position (t, t)."""
    best = None
    for i in range(t, nr):
        row = s[i]
        for j in range(t, nc):
            x = row[j]
            if x != 0 and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    if best is None:
        return False
    _, i, j = best
    if i != t:
        s[t], s[i] = s[i], s[t]
        u[t], u[i] = u[i], u[t]
    if j != t:
        _swap_cols(s, t, j)
        _swap_cols(v, t, j)
    return True


def _reduce_column(s, u, t: int, nr: int) -> bool:
    """Clear column t below the pivot; True if the pivot was replaced."""
    for i in range(t + 1, nr):
        if s[i][t] == 0:
            continue
        q = s[i][t] // s[t][t]
        if q:
            _row_axpy(s, i, t, -q)
            _row_axpy(u, i, t, -q)
        if s[i][t]:
            # Remainder is a strictly smaller pivot candidate.
            s[t], s[i] = s[i], s[t]
            u[t], u[i] = u[i], u[t]
            return True
    return False


def _reduce_row(s, v, t: int, nc: int) -> bool:
    """Clear row t right of the pivot; True if the pivot was replaced."""
    for j in range(t + 1, nc):
        if s[t][j] == 0:
            continue
        q = s[t][j] // s[t][t]
        if q:
            _col_axpy(s, j, t, -q)
            _col_axpy(v, j, t, -q)
        if s[t][j]:
            _swap_cols(s, t, j)
            _swap_cols(v, t, j)
            return True
    return False


def _absorb_nondivisible(s, u, t: int, nr: int, nc: int) -> bool:
    """Pull a residue entry into row t when the pivot fails to divide it."""
    d = s[t][t]
    for i in range(t + 1, nr):
        row = s[i]
        for j in range(t + 1, nc):
            if row[j] % d:
                _row_axpy(s, t, i, 1)
                _row_axpy(u, t, i, 1)
                return True
    return False


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form of an integer matrix.

    Pivot selection always takes a nonzero entry of least absolute value in
    the remaining submatrix, which keeps coefficient growth mild. Row
    operations are mirrored on U, column operations on V, so the invariant
    U @ m @ V = S holds throughout. Each stage ends only when the pivot
    divides every entry of the remaining submatrix, which forces the
    divisibility chain d_1 | d_2 | ... on the diagonal.
    """
    nr, nc = m.rows, m.cols
    s = m.to_rows()
    u = _identity_lists(nr)
    v = _identity_lists(nc)

    for t in range(min(nr, nc)):
        if not _bring_pivot(s, u, v, t, nr, nc):
            break
        while True:
            if _reduce_column(s, u, t, nr):
                continue
            if _reduce_row(s, v, t, nc):
                continue
            if _absorb_nondivisible(s, u, t, nr, nc):
                continue
            break

    for t in range(min(nr, nc)):
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]

    return SnfResult(
        u=IntMatrix(nr, nr, tuple(x for row in u for x in row)),
        s=IntMatrix(nr, nc, tuple(x for row in s for x in row)),
        v=IntMatrix(nc, nc, tuple(x for row in v for x in row)),
    )


def _scaled_integer_rows(m: RatMatrix) -> list[list[int]]:
    out: list[list[int]] = []
    for i in range(m.rows):
        row = m.row(i)
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def _fraction_free_rank(rows: list[list[int]], ncols: int) -> int:
    """Rank by Bareiss elimination with column skipping.

    Entries stay equal to minors of the input, so every division below is
    exact (Sylvester's determinant identity); this holds for any choice of
    pivot columns.
    """
    r = 0
    prev = 1
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        top = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            x = row[c]
            for j in range(c + 1, ncols):
                num = pv * row[j] - x * top[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("non-exact division in fraction-free elimination")
                row[j] = q
            row[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def rank(m: RatMatrix) -> int:
    """Rank of a rational matrix, exactly."""
    return _fraction_free_rank(_scaled_integer_rows(m), m.cols)


def kernel_dim(m: RatMatrix) -> int:
    """Dimension of the right kernel: cols - rank."""
    return m.cols - rank(m)


def cokernel(m: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Invariants of coker(m : Z^cols -> Z^rows) = Z^rows / im(m).

    Returns (free_rank, torsion) where torsion lists the invariant factors
    greater than 1 in divisibility order.
    """
    diag = snf(m).diagonal
    nonzero = [d for d in diag if d]
    free = m.rows - len(nonzero)
    torsion = tuple(d for d in nonzero if d > 1)
    return free, torsion


def det(m: IntMatrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pk * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]
