"""Resonance of the doubled Orlik-Solomon algebra, by exact linear algebra.

A point of the doubled algebra's degree one is a pair (a, b): rational
coordinates a over the degree-one basis of the base algebra and b over the
dual degree-two basis. Left multiplication by (a, b) makes the double a
cochain complex, concentrated in degrees 0..3 with middle ranks
N = r1 + r2. With cochains written as row vectors the differentials are

    d1 = (a  b),    1 x N
    d2 = [[Phi(b), Delta(a)], [-Delta(a)^T, 0]],    N x N
    d3 = (a; b) as a column,    N x 1

where Delta(a)[j, k] = sum_i mu[i, j, k] a_i (r1 x r2) and
Phi(b)[i, j] = sum_k mu[i, j, k] b_k (r1 x r1, antisymmetric), with
mu[i, j, k] the structure constants of the base algebra extended
antisymmetrically in (i, j). The chain identities d1 d2 = 0 and d2 d3 = 0
hold for every point and are asserted at construction.

Betti numbers of the complex are computed from exact ranks. A point lies in
the k-th resonance variety of depth d exactly when the k-th Betti number is
at least d. For the base algebra alone, a degree-one element a is
nonresonant when the complex (A, a) is exact in degrees zero and one, which
for a != 0 happens exactly when Delta(a) has rank r1 - 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangement import Arrangement, ArrangementClass, classify, nbc_set
from .exact_linalg import RatMatrix, kernel_dim, rank
from .os_algebra import DoubledAlgebra, GradedAlgebra

__all__ = [
    "DimensionMismatch",
    "ChainConditionViolated",
    "AomotoPoint",
    "AomotoComplex",
    "delta_matrix",
    "phi_matrix",
    "aomoto_complex",
    "betti",
    "betti_numbers",
    "is_nonresonant",
    "in_resonance",
    "zero_a_identity_check",
    "generic_betti",
    "sample_point",
    "trial_seed",
    "r11_prediction",
]


class DimensionMismatch(ValueError):
    """A coordinate vector does not match the rank it indexes."""


class ChainConditionViolated(RuntimeError):
    """A differential composite is nonzero; the complex is corrupt."""


@dataclass(frozen=True)
class AomotoPoint:
    """A degree-one point of the double: coordinates (a, b), all exact."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @staticmethod
    def make(a: Iterable, b: Iterable) -> "AomotoPoint":
        return AomotoPoint(tuple(Fraction(x) for x in a), tuple(Fraction(x) for x in b))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.a) and all(x == 0 for x in self.b)


@dataclass(frozen=True)
class AomotoComplex:
    """The three differentials of the complex at a fixed point."""

    d1: RatMatrix  # 1 x N
    d2: RatMatrix  # N x N
    d3: RatMatrix  # N x 1


def _mu_rows(alg: GradedAlgebra) -> dict[tuple[int, int], dict[int, int]]:
    """Structure constants on stored degree-one pairs, by basis index."""
    deg1 = {lab: i for i, lab in enumerate(alg.basis[1])}
    deg2 = {lab: k for k, lab in enumerate(alg.basis[2])}
    out: dict[tuple[int, int], dict[int, int]] = {}
    for (x, y), vec in alg.products.items():
        if x in deg1 and y in deg1:
            out[(deg1[x], deg1[y])] = {deg2[lab]: c for lab, c in vec.items()}
    return out


def _check_length(coords: Sequence[Fraction], want: int, what: str) -> None:
    if len(coords) != want:
        raise DimensionMismatch(f"{what} has {len(coords)} coordinates, expected {want}")


def delta_matrix(alg: GradedAlgebra, a: Sequence[Fraction]) -> RatMatrix:
    """The r1 x r2 matrix Delta(a)[j, k] = sum_i mu[i, j, k] a_i."""
    r1 = alg.rank(1)
    r2 = alg.rank(2)
    a = tuple(Fraction(x) for x in a)
    _check_length(a, r1, "a")
    rows = [[Fraction(0)] * r2 for _ in range(r1)]
    for (i, j), vec in _mu_rows(alg).items():
        for k, c in vec.items():
            rows[j][k] += c * a[i]
            rows[i][k] -= c * a[j]
    return RatMatrix.from_rows(rows) if r1 else RatMatrix(0, r2, ())


def phi_matrix(alg: GradedAlgebra, b: Sequence[Fraction]) -> RatMatrix:
    """The antisymmetric r1 x r1 matrix Phi(b)[i, j] = sum_k mu[i, j, k] b_k."""
    r1 = alg.rank(1)
    r2 = alg.rank(2)
    b = tuple(Fraction(x) for x in b)
    _check_length(b, r2, "b")
    rows = [[Fraction(0)] * r1 for _ in range(r1)]
    for (i, j), vec in _mu_rows(alg).items():
        s = sum((c * b[k] for k, c in vec.items()), Fraction(0))
        rows[i][j] = s
        rows[j][i] = -s
    return RatMatrix.from_rows(rows) if r1 else RatMatrix(0, 0, ())


def aomoto_complex(dbl: DoubledAlgebra, pt: AomotoPoint) -> AomotoComplex:
    """Assemble the differentials at a point and assert the chain identities."""
    base = dbl.base
    r1 = base.rank(1)
    r2 = base.rank(2)
    a = tuple(Fraction(x) for x in pt.a)
    b = tuple(Fraction(x) for x in pt.b)
    _check_length(a, r1, "a")
    _check_length(b, r2, "b")
    n = r1 + r2

    delta = delta_matrix(base, a)
    phi = phi_matrix(base, b)

    d1 = RatMatrix(1, n, a + b)
    rows = []
    for i in range(r1):
        rows.append(list(phi.row(i)) + list(delta.row(i)))
    dt = delta.transpose()
    for k in range(r2):
        rows.append([-x for x in dt.row(k)] + [Fraction(0)] * r2)
    d2 = RatMatrix.from_rows(rows) if n else RatMatrix(0, 0, ())
    d3 = RatMatrix(n, 1, a + b)

    if n and not (d1 @ d2).is_zero():
        raise ChainConditionViolated("d1 . d2 != 0")
    if n and not (d2 @ d3).is_zero():
        raise ChainConditionViolated("d2 . d3 != 0")
    return AomotoComplex(d1, d2, d3)


def betti_numbers(dbl: DoubledAlgebra, pt: AomotoPoint) -> tuple[int, int, int, int]:
    """All four Betti numbers of the complex at the point.

    Cochains are row vectors, so the kernel of d acting from degree k has
    dimension (rows of d) - rank d, and the k-th Betti number is
    dim ker d_(k+1) - rank d_k, with the outer differentials zero.
    """
    cx = aomoto_complex(dbl, pt)
    n = cx.d1.cols
    dims = (1, n, n, 1)
    ranks = (0, rank(cx.d1), rank(cx.d2), rank(cx.d3), 0)
    return tuple(dims[k] - ranks[k + 1] - ranks[k] for k in range(4))


def betti(dbl: DoubledAlgebra, pt: AomotoPoint, k: int) -> int:
    """The k-th Betti number of the complex at the point, k in 0..3."""
    if not 0 <= k <= 3:
        raise ValueError("degree k must be between 0 and 3")
    return betti_numbers(dbl, pt)[k]


def is_nonresonant(alg: GradedAlgebra, a: Sequence[Fraction]) -> bool:
    """Exactness of (A, a) in degrees 0 and 1.

    The rows of Delta(a) are always dependent (a itself is in the kernel),
    so the rank is at most r1 - 1; equality, together with a != 0, is
    exactness.
    """
    a = tuple(Fraction(x) for x in a)
    _check_length(a, alg.rank(1), "a")
    if all(x == 0 for x in a):
        return False
    return rank(delta_matrix(alg, a)) == alg.rank(1) - 1


def in_resonance(dbl: DoubledAlgebra, pt: AomotoPoint, k: int, d: int) -> bool:
    """Membership of the point in the depth-d resonance variety in degree k."""
    return betti(dbl, pt, k) >= d


def zero_a_identity_check(dbl: DoubledAlgebra, b: Sequence[Fraction]) -> tuple[int, int]:
    """First Betti number at (0, b) against r2 - 1 + dim ker Phi(b).

    The two sides are computed by different routes (rank of the full d2
    versus the kernel of Phi alone) and agree identically for nonzero b.
    Returns (lhs, rhs) so callers can report both.
    """
    base = dbl.base
    r1 = base.rank(1)
    r2 = base.rank(2)
    if r2 == 0:
        raise DimensionMismatch("the degree-two part is trivial; no dual coordinates exist")
    b = tuple(Fraction(x) for x in b)
    _check_length(b, r2, "b")
    if all(x == 0 for x in b):
        raise ValueError("b must be nonzero")
    lhs = betti(dbl, AomotoPoint((Fraction(0),) * r1, b), 1)
    rhs = r2 - 1 + kernel_dim(phi_matrix(base, b))
    return lhs, rhs


def trial_seed(seed: int, index: int) -> int:
    """Per-trial derived seed: seed * 1000003 + index."""
    return seed * 1_000_003 + index


def sample_point(dbl: DoubledAlgebra, rng: random.Random, bound: int = 10) -> AomotoPoint:
    """A point with integer coordinates drawn uniformly from [-bound, bound]."""
    r1 = dbl.base.rank(1)
    r2 = dbl.base.rank(2)
    coords = [Fraction(rng.randint(-bound, bound)) for _ in range(r1 + r2)]
    return AomotoPoint(tuple(coords[:r1]), tuple(coords[r1:]))


def generic_betti(dbl: DoubledAlgebra, k: int, trials: int = 5, seed: int = 0) -> int:
    """Minimum k-th Betti number over seeded random sample points.

    Betti numbers can only jump up on proper subvarieties, so the minimum
    over a few random points is the generic value with overwhelming margin;
    sampling is deterministic in (seed, trials) via ``trial_seed``.
    """
    best: int | None = None
    for t in range(trials):
        pt = sample_point(dbl, random.Random(trial_seed(seed, t)))
        val = betti(dbl, pt, k)
        best = val if best is None else min(best, val)
    if best is None:
        raise ValueError("at least one trial is required")
    return best


def r11_prediction(arr: Arrangement) -> tuple[ArrangementClass, int]:
    """Class of the arrangement and the dimension of its depth-one, degree-one
    resonance variety of the double.

    Pencils give n, near-pencils 2n - 2, and everything else the full
    degree-one rank n + (number of nbc pairs).
    """
    cls = classify(arr)
    n = arr.n
    if cls is ArrangementClass.PENCIL:
        dim = n
    elif cls is ArrangementClass.NEAR_PENCIL:
        dim = 2 * n - 2
    else:
        dim = n + len(nbc_set(arr))
    return cls, dim
