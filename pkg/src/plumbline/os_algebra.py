"""The Orlik-Solomon algebra of an arrangement and its double.

For an arrangement on lines 0..n the (deconed) Orlik-Solomon algebra is a
graded algebra A = A0 + A1 + A2 over the integers. A1 has basis e_1..e_n,
one generator per line other than line 0, and A2 has basis f_(j,k) indexed
by the nbc pairs of the arrangement. The product of two degree-one
generators e_i e_j with i < j is governed by the point P containing lines
i and j:

* if min P = i, the product is f_(i,j);
* if 1 <= min P < i, it is f_(min P, j) - f_(min P, i);
* if 0 lies in P, it is zero.

Products are stored only on canonically ordered basis pairs and extended by
graded commutativity, so odd generators anticommute and square to zero.

The double of A is a graded algebra on degrees 0..3 built from A and its
dual: degree 1 is A1 plus the dual of A2, degree 2 is A2 plus the dual of
A1, and the top degree is the dual of the unit. A degree-one generator from
A1 multiplies a dualized degree-two generator into dualized degree-one
generators through the structure constants of A, and the remaining pairing
of complementary degrees is the identity on dual bases. Doubles of algebras
whose degree-one part multiplies to zero (pencils) have an identically zero
product on degree one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arrangement import Arrangement, nbc_set

__all__ = [
    "DegreeError",
    "Element",
    "GradedAlgebra",
    "DoubledAlgebra",
    "os_algebra",
    "double",
    "dual_label",
]


class DegreeError(ValueError):
    """A product or construction leaves the graded range of the algebra."""


def dual_label(label: str) -> str:
    """Label of the dual basis vector; a tilde marks dualized generators."""
    return "~" + label


@dataclass(frozen=True)
class Element:
    """A homogeneous element: a degree and a sparse integer coordinate vector.

    Zero coefficients are dropped on construction, so equality of elements
    is equality of dataclass fields.
    """

    degree: int
    coeffs: dict[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True, eq=True)
class GradedAlgebra:
    """A finite graded algebra given by basis labels and structure constants.

    ``basis[d]`` lists the basis labels in degree d; degree 0 is spanned by
    the unit. ``products`` maps canonically ordered basis pairs (lower
    degree first; within a degree, lower basis index first) to sparse
    integer vectors over the target degree. Pairs that multiply to zero are
    omitted. Queries for non-canonical pairs are answered through graded
    commutativity: x y = (-1)^(deg x * deg y) y x, and odd squares vanish.
    """

    basis: tuple[tuple[str, ...], ...]
    products: dict[tuple[str, str], dict[str, int]]

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    @property
    def unit(self) -> str:
        return self.basis[0][0]

    def rank(self, degree: int) -> int:
        return len(self.basis[degree])

    @cached_property
    def _position(self) -> dict[str, tuple[int, int]]:
        out: dict[str, tuple[int, int]] = {}
        for d, labels in enumerate(self.basis):
            for i, lab in enumerate(labels):
                out[lab] = (d, i)
        return out

    def degree_of(self, label: str) -> int:
        return self._position[label][0]

    def element(self, label: str) -> Element:
        return Element(self.degree_of(label), {label: 1})

    def basis_product(self, x: str, y: str) -> dict[str, int]:
        """Structure constants of x y as a sparse vector, sign included."""
        dx, ix = self._position[x]
        dy, iy = self._position[y]
        if dx == 0:
            return {y: 1}
        if dy == 0:
            return {x: 1}
        if dx + dy > self.top_degree:
            return {}
        if (dx, ix) < (dy, iy):
            return dict(self.products.get((x, y), {}))
        if (dx, ix) == (dy, iy):
            if dx % 2:
                return {}
            return dict(self.products.get((x, y), {}))
        sign = -1 if (dx * dy) % 2 else 1
        return {lab: sign * c for lab, c in self.products.get((y, x), {}).items()}

    def multiply(self, x: Element, y: Element) -> Element:
        """Bilinear extension of ``basis_product`` to homogeneous elements."""
        if x.degree + y.degree > self.top_degree:
            raise DegreeError(
                f"degree {x.degree} + {y.degree} exceeds top degree {self.top_degree}"
            )
        out: dict[str, int] = {}
        for lx, cx in x.coeffs.items():
            for ly, cy in y.coeffs.items():
                for lab, c in self.basis_product(lx, ly).items():
                    out[lab] = out.get(lab, 0) + cx * cy * c
        return Element(x.degree + y.degree, out)

    def _product_items(self) -> list[tuple[tuple[str, str], dict[str, int]]]:
        pos = self._position
        return sorted(self.products.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))

    def to_json(self) -> dict:
        """Basis labels per degree plus the stored structure constants."""
        doc: dict = {f"degree{d}": list(labels) for d, labels in enumerate(self.basis)}
        doc["products"] = [
            {"x": x, "y": y, "value": {lab: c for lab, c in sorted(vec.items())}}
            for (x, y), vec in self._product_items()
        ]
        return doc


@dataclass(frozen=True, eq=True)
class DoubledAlgebra(GradedAlgebra):
    """The double of a top-degree-two algebra; keeps a handle on the base."""

    base: GradedAlgebra


def os_algebra(arr: Arrangement) -> GradedAlgebra:
    """The Orlik-Solomon algebra of an arrangement, degrees 0..2."""
    n = arr.n
    e_labels = tuple(f"e{i}" for i in range(1, n + 1))
    pairs = nbc_set(arr)
    f_label = {(p.j, p.k): f"f({p.j},{p.k})" for p in pairs}
    products: dict[tuple[str, str], dict[str, int]] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pt = arr.points[arr.point_of(i, j)]
            k = pt[0]
            if k == 0:
                continue
            if k == i:
                vec = {f_label[(i, j)]: 1}
            else:
                vec = {f_label[(k, j)]: 1, f_label[(k, i)]: -1}
            products[(f"e{i}", f"e{j}")] = vec
    basis = (("1",), e_labels, tuple(f_label[(p.j, p.k)] for p in pairs))
    return GradedAlgebra(basis, products)


def double(alg: GradedAlgebra) -> DoubledAlgebra:
    """The double of a graded algebra with top degree two.

    Degree 1 is the degree-one basis of ``alg`` followed by the duals of its
    degree-two basis; degree 2 is the degree-two basis followed by the duals
    of the degree-one basis; degree 3 is the dual of the unit. Both middle
    degrees have rank (rank A1 + rank A2).
    """
    if alg.top_degree != 2:
        raise DegreeError("doubling requires a graded algebra with top degree 2")
    a_labels = alg.basis[1]
    b_labels = alg.basis[2]
    top = dual_label(alg.unit)
    deg1 = a_labels + tuple(dual_label(b) for b in b_labels)
    deg2 = b_labels + tuple(dual_label(a) for a in a_labels)

    products: dict[tuple[str, str], dict[str, int]] = {}
    for pair, vec in alg.products.items():
        if alg.degree_of(pair[0]) == 1 and alg.degree_of(pair[1]) == 1:
            products[pair] = dict(vec)
    # A degree-one generator against a dualized degree-two generator lands in
    # dualized degree-one generators, with the structure constants of the base.
    for aj in a_labels:
        for bk in b_labels:
            vec = {}
            for ai in a_labels:
                c = alg.basis_product(ai, aj).get(bk, 0)
                if c:
                    vec[dual_label(ai)] = c
            if vec:
                products[(aj, dual_label(bk))] = vec
    # Complementary degrees pair as the identity on dual bases.
    for ai in a_labels:
        products[(ai, dual_label(ai))] = {top: 1}
    for bk in b_labels:
        products[(dual_label(bk), bk)] = {top: 1}

    basis = ((alg.unit,), deg1, deg2, (top,))
    return DoubledAlgebra(basis=basis, products=products, base=alg)
