"""Intersection and cohomology rings of the boundary manifold.

The boundary 3-manifold M of an arrangement has free homology, with
H_1 generated by meridian classes t_1..t_n and cycle classes g_(j,k), one
per nbc pair, and H_2 generated by dual surface classes F_1..F_n and
tau_(j,k). The intersection product of two surface classes is a curve
class, given by closed-form tables:

* tau against tau is zero;
* F_i against tau_(j,k) is -t_k when i lies in the point of (j, k) with
  i != k, is the sum of t_m over that point minus t_i when i = k, and is
  zero when i is outside the point;
* F_i against F_j follows the same case split as the degree-one product in
  the Orlik-Solomon algebra, with g in place of f.

The product is antisymmetric (surfaces in a 3-manifold meet their own class
trivially), and H_1 pairs with H_2 as the identity on dual bases.

``cohomology_ring`` transports these tables through Poincare duality to cup
products, and ``verify_double_isomorphism`` checks, structure constant by
structure constant, that the resulting ring is the double of the
Orlik-Solomon algebra under the basis correspondence

    PD(F_i) -> e_i,   PD(tau_(j,k)) -> dual f_(j,k),
    PD(t_i) -> dual e_i,   PD(g_(j,k)) -> f_(j,k).

The two sides are computed by independent routes (geometric tables versus
the doubling construction), so agreement here is a genuine cross-check, not
a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arrangement import Arrangement, nbc_set
from .os_algebra import DoubledAlgebra, GradedAlgebra, double, dual_label, os_algebra

__all__ = [
    "IntersectionRing",
    "IsomorphismReport",
    "intersection_ring",
    "cohomology_ring",
    "verify_double_isomorphism",
]


@dataclass(frozen=True, eq=True)
class IntersectionRing:
    """H_1, H_2, the intersection product, and the intersection pairing.

    ``products`` stores the product of H_2 classes on ordered pairs only
    (lower basis index first); queries are extended antisymmetrically and
    diagonal products are zero. The H_1 x H_2 pairing is the identity on
    dual bases (t_i with F_i, g_(j,k) with tau_(j,k)).
    """

    h1_labels: tuple[str, ...]
    h2_labels: tuple[str, ...]
    products: dict[tuple[str, str], dict[str, int]]

    @cached_property
    def _h2_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.h2_labels)}

    def product(self, x: str, y: str) -> dict[str, int]:
        """Intersection of two H_2 basis classes as a sparse H_1 vector."""
        ix = self._h2_index[x]
        iy = self._h2_index[y]
        if ix == iy:
            return {}
        if ix < iy:
            return dict(self.products.get((x, y), {}))
        return {lab: -c for lab, c in self.products.get((y, x), {}).items()}

    def pairing(self, h1: str, h2: str) -> int:
        """Intersection number of an H_1 class with an H_2 class."""
        if h1 not in self._dual_of:
            raise KeyError(h1)
        if h2 not in self._h2_index:
            raise KeyError(h2)
        return 1 if self._dual_of[h1] == h2 else 0

    @cached_property
    def _dual_of(self) -> dict[str, str]:
        return {h1: _dual_surface(h1) for h1 in self.h1_labels}

    def to_json(self) -> dict:
        idx = self._h2_index
        return {
            "h1": list(self.h1_labels),
            "h2": list(self.h2_labels),
            "products": [
                {"x": x, "y": y, "value": {lab: c for lab, c in sorted(vec.items())}}
                for (x, y), vec in sorted(self.products.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]]))
            ],
        }


def _dual_surface(h1_label: str) -> str:
    # t3 <-> F3, g(1,2) <-> tau(1,2)
    if h1_label.startswith("t"):
        return "F" + h1_label[1:]
    return "tau" + h1_label[1:]


def intersection_ring(arr: Arrangement) -> IntersectionRing:
    """The intersection ring of the boundary manifold, from the closed tables."""
    n = arr.n
    pairs = nbc_set(arr)
    t = [f"t{i}" for i in range(1, n + 1)]
    g = {(p.j, p.k): f"g({p.j},{p.k})" for p in pairs}
    f_surf = [f"F{i}" for i in range(1, n + 1)]
    tau = {(p.j, p.k): f"tau({p.j},{p.k})" for p in pairs}

    products: dict[tuple[str, str], dict[str, int]] = {}

    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            pt = arr.points[arr.point_of(a, b)]
            k = pt[0]
            if k == 0:
                continue
            if k == a:
                vec = {g[(a, b)]: 1}
            else:
                vec = {g[(k, b)]: 1, g[(k, a)]: -1}
            products[(f"F{a}", f"F{b}")] = vec

    for i in range(1, n + 1):
        for p in pairs:
            pt = arr.points[p.point]
            if i == p.k:
                vec = {f"t{m}": 1 for m in pt if m != i}
            elif i in pt:
                vec = {f"t{p.k}": -1}
            else:
                continue
            products[(f"F{i}", tau[(p.j, p.k)])] = vec

    h2 = tuple(f_surf) + tuple(tau[(p.j, p.k)] for p in pairs)
    h1 = tuple(t) + tuple(g[(p.j, p.k)] for p in pairs)
    return IntersectionRing(h1, h2, products)


def cohomology_ring(arr: Arrangement) -> GradedAlgebra:
    """The cohomology ring of the boundary manifold, degrees 0..3.

    Degree-one classes are the Poincare duals of the H_2 basis and carry the
    labels ~t_i, ~g_(j,k); degree-two classes are the duals of the H_1 basis,
    labelled ~F_i, ~tau_(j,k); the top class is the dual of a point, "pt".
    Cup products of degree-one classes are the intersection products of the
    dual surfaces, rewritten through duality; degree one cups degree two as
    the identity pairing into pt.
    """
    ring = intersection_ring(arr)
    h1 = ring.h1_labels
    # PD(F_i) = ~t_i and PD(tau) = ~g in degree one; PD(t_i) = ~F_i and
    # PD(g) = ~tau in degree two.
    deg1 = tuple("~" + lab for lab in h1)
    deg2 = tuple("~" + _dual_surface(lab) for lab in h1)
    pd2 = {lab: "~" + _dual_surface(lab) for lab in h1}  # H_1 class -> its PD in degree 2

    products: dict[tuple[str, str], dict[str, int]] = {}
    for a in range(len(h1)):
        for b in range(a + 1, len(h1)):
            vec = ring.product(_dual_surface(h1[a]), _dual_surface(h1[b]))
            if vec:
                products[("~" + h1[a], "~" + h1[b])] = {pd2[lab]: c for lab, c in vec.items()}
    for lab in h1:
        # complementary degrees pair as the identity, into the top class
        products[("~" + lab, pd2[lab])] = {"pt": 1}

    basis = (("1",), deg1, deg2, ("pt",))
    return GradedAlgebra(basis, products)


@dataclass(frozen=True)
class IsomorphismReport:
    """Outcome of comparing the cohomology ring with the doubled algebra."""

    ok: bool
    mismatches: tuple[tuple[str, str, dict, dict], ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "mismatches": [
                {"x": x, "y": y, "cohomology": dict(sorted(lhs.items())), "double": dict(sorted(rhs.items()))}
                for x, y, lhs, rhs in self.mismatches
            ],
        }


def _label_map(arr: Arrangement, dbl: DoubledAlgebra) -> dict[str, str]:
    """Cohomology basis label -> double basis label, via Poincare duality."""
    n = arr.n
    out = {"1": dbl.unit, "pt": dual_label(dbl.base.unit)}
    for i in range(1, n + 1):
        out[f"~t{i}"] = f"e{i}"
        out[f"~F{i}"] = dual_label(f"e{i}")
    for p in nbc_set(arr):
        out[f"~g({p.j},{p.k})"] = dual_label(f"f({p.j},{p.k})")
        out[f"~tau({p.j},{p.k})"] = f"f({p.j},{p.k})"
    return out


def verify_double_isomorphism(arr: Arrangement) -> IsomorphismReport:
    """Compare all ordered structure constants of the two rings.

    Builds the cohomology ring from the geometric product tables and the
    double of the Orlik-Solomon algebra from the doubling construction, maps
    the cohomology basis onto the double's basis, and compares the products
    of every ordered basis pair in degrees one times one and one times two
    (both orders). Returns a report rather than raising, so callers can
    surface the exact mismatching pairs.
    """
    coh = cohomology_ring(arr)
    dbl = double(os_algebra(arr))
    phi = _label_map(arr, dbl)

    mismatches: list[tuple[str, str, dict, dict]] = []
    deg1 = coh.basis[1]
    deg2 = coh.basis[2]
    test_pairs = [(x, y) for x in deg1 for y in deg1]
    test_pairs += [(x, y) for x in deg1 for y in deg2]
    test_pairs += [(x, y) for x in deg2 for y in deg1]
    for x, y in test_pairs:
        lhs = {phi[lab]: c for lab, c in coh.basis_product(x, y).items()}
        rhs = dbl.basis_product(phi[x], phi[y])
        if lhs != rhs:
            mismatches.append((x, y, lhs, rhs))
    return IsomorphismReport(ok=not mismatches, mismatches=tuple(mismatches))
