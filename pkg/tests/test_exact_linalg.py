"""Tests for the exact integer/rational linear algebra kernel.

Smith normal form is checked against an independent oracle: the k-th
determinantal divisor (gcd of all k x k minors) of the input must equal the
product of the first k diagonal entries of the normal form. Rank is checked
against straightforward Gaussian elimination over Fraction.
"""

import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plumbline.exact_linalg import (
    IntMatrix,
    RatMatrix,
    cokernel,
    det,
    kernel_dim,
    rank,
    snf,
)


def minor_gcds(m: IntMatrix) -> list[int]:
    """gcd of all k x k minors of m, for k = 1 .. min(rows, cols).

    Brute force over index subsets with cofactor expansion; fine for the
    small matrices used in tests, and entirely independent of snf().
    """

    def minor_det(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
        if len(rows) == 1:
            return m[rows[0], cols[0]]
        total = 0
        sign = 1
        for pos, r in enumerate(rows):
            x = m[r, cols[0]]
            if x:
                rest = rows[:pos] + rows[pos + 1 :]
                total += sign * x * minor_det(rest, cols[1:])
            sign = -sign
        return total

    out = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rs in combinations(range(m.rows), k):
            for cs in combinations(range(m.cols), k):
                g = gcd(g, minor_det(rs, cs))
        out.append(g)
    return out


def fraction_rank(m: RatMatrix) -> int:
    """Rank by plain Gaussian elimination over Fraction."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def check_snf(m: IntMatrix) -> None:
    res = snf(m)
    # Exact factorization.
    assert res.u @ m @ res.v == res.s
    # U, V unimodular.
    assert abs(det(res.u)) == 1
    assert abs(det(res.v)) == 1
    # S diagonal, nonnegative, divisibility chain, zeros last.
    for i in range(res.s.rows):
        for j in range(res.s.cols):
            if i != j:
                assert res.s[i, j] == 0
    diag = res.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    # Determinantal divisor oracle: prod(diag[:k]) == gcd of k x k minors.
    divisors = minor_gcds(m)
    prod = 1
    for k, d_k in enumerate(divisors, start=1):
        prod *= diag[k - 1]
        assert prod == d_k, f"determinantal divisor mismatch at k={k}"


class TestSnfExamples:
    def test_two_by_two(self):
        m = IntMatrix.from_rows([[2, 4], [6, 8]])
        assert snf(m).diagonal == (2, 4)
        check_snf(m)

    def test_identity(self):
        m = IntMatrix.identity(3)
        assert snf(m).diagonal == (1, 1, 1)

    def test_zero(self):
        m = IntMatrix.zeros(2, 3)
        assert snf(m).diagonal == (0, 0)

    def test_single_entry(self):
        assert snf(IntMatrix.from_rows([[-7]])).diagonal == (7,)

    def test_rectangular(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert snf(m).diagonal == (1, 3)
        check_snf(m)

    def test_torsion_example(self):
        # coker = Z/2 + Z/6.
        m = IntMatrix.from_rows([[2, 0], [0, 6]])
        assert cokernel(m) == (0, (2, 6))

    def test_nondivisible_pivot(self):
        # Forces the absorb step: minimal entries 2 and 3 off-diagonal.
        m = IntMatrix.from_rows([[2, 0], [0, 3]])
        assert snf(m).diagonal == (1, 6)
        check_snf(m)


class TestSnfRandom:
    def test_random_small_matrices(self):
        rng = random.Random(971)
        for _ in range(300):
            nr = rng.randint(1, 4)
            nc = rng.randint(1, 4)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
            )
            check_snf(m)

    def test_random_rank_matches_snf(self):
        rng = random.Random(972)
        for _ in range(200):
            nr = rng.randint(1, 5)
            nc = rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
            )
            by_snf = sum(1 for d in snf(m).diagonal if d)
            assert rank(m.to_rational()) == by_snf


@st.composite
def int_matrices(draw, max_dim=5, max_abs=20):
    nr = draw(st.integers(1, max_dim))
    nc = draw(st.integers(1, max_dim))
    entries = draw(
        st.lists(st.integers(-max_abs, max_abs), min_size=nr * nc, max_size=nr * nc)
    )
    return IntMatrix(nr, nc, tuple(entries))


class TestSnfProperties:
    @settings(max_examples=150, deadline=None)
    @given(int_matrices())
    def test_factorization_and_divisors(self, m):
        check_snf(m)

    @settings(max_examples=100, deadline=None)
    @given(int_matrices())
    def test_transpose_same_invariants(self, m):
        assert snf(m).diagonal == snf(m.transpose()).diagonal


class TestRank:
    def test_examples(self):
        assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(RatMatrix.from_rows([[1, 0], [0, 1]])) == 2
        assert rank(RatMatrix.zeros(3, 2)) == 0

    def test_fractional_entries(self):
        m = RatMatrix.from_rows(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
        )
        assert rank(m) == fraction_rank(m)

    def test_kernel_dim(self):
        m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
        assert kernel_dim(m) == 2

    @settings(max_examples=150, deadline=None)
    @given(int_matrices(max_dim=6, max_abs=9))
    def test_matches_fraction_elimination(self, m):
        q = m.to_rational()
        assert rank(q) == fraction_rank(q)

    @settings(max_examples=100, deadline=None)
    @given(int_matrices(max_dim=4, max_abs=9))
    def test_rational_scaling_invariance(self, m):
        # Scaling a row by a nonzero rational cannot change the rank.
        q = m.to_rational()
        scaled = RatMatrix.from_rows(
            [[x * Fraction(3, 7) for x in q.row(0)]] + [list(q.row(i)) for i in range(1, q.rows)]
        )
        assert rank(scaled) == rank(q)


class TestCokernel:
    def test_free_part(self):
        # Z^2 <- Z^1 by (2, 4): image has rank 1, gcd 2.
        m = IntMatrix.from_rows([[2], [4]])
        assert cokernel(m) == (1, (2,))

    def test_surjective(self):
        assert cokernel(IntMatrix.identity(3)) == (0, ())

    def test_zero_map(self):
        assert cokernel(IntMatrix.zeros(3, 2)) == (3, ())


class TestDet:
    def test_examples(self):
        assert det(IntMatrix.from_rows([[2, 4], [6, 8]])) == -8
        assert det(IntMatrix.identity(4)) == 1
        assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert det(IntMatrix.zeros(3, 3)) == 0

    def test_rejects_rectangular(self):
        with pytest.raises(ValueError):
            det(IntMatrix.zeros(2, 3))

    @settings(max_examples=100, deadline=None)
    @given(int_matrices(max_dim=4, max_abs=9))
    def test_det_vs_snf(self, m):
        if m.rows != m.cols:
            return
        diag = snf(m).diagonal
        prod = 1
        for d in diag:
            prod *= d
        assert abs(det(m)) == prod


class TestMatrixBasics:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_matmul(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).to_rows() == [[2, 1], [4, 3]]
        with pytest.raises(ValueError):
            a @ IntMatrix.zeros(3, 3)

    def test_indexing(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert a[1, 0] == 3
        with pytest.raises(IndexError):
            a[2, 0]

    def test_json(self):
        a = IntMatrix.from_rows([[1, -2]])
        assert a.to_json() == {"rows": 1, "cols": 2, "entries": ["1", "-2"]}
        q = RatMatrix.from_rows([[Fraction(1, 2), 3]])
        assert q.to_json() == {"rows": 1, "cols": 2, "entries": ["1/2", "3"]}
