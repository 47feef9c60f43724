"""Plumbing graphs and the first homology of plumbed 3-manifolds.

The boundary 3-manifold of an arrangement is encoded by a plumbing graph:
the incidence graph of the arrangement with an Euler-number weight on every
vertex. A line lying in p points gets weight 1 - p; every point vertex gets
weight -1. For a weighted graph G the associated symmetric matrix has the
weights on the diagonal and a 1 for every edge, and the first homology of
the plumbed manifold is Z^b1(G) plus the cokernel of that matrix.

For graphs coming from an arrangement the cokernel is free of rank n (lines
are 0..n), so the total first homology is free of rank b1(G) + n. That fact
is rechecked on every call and a violation raises ``InternalContradiction``
rather than returning silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, incidence_graph
from .exact_linalg import IntMatrix, cokernel

__all__ = [
    "InternalContradiction",
    "PlumbingGraph",
    "H1Result",
    "plumbing_graph",
    "plumbing_matrix",
    "h1_plumbed",
    "h1_boundary",
]


class InternalContradiction(RuntimeError):
    """A computed invariant contradicts one derived by an independent route."""


@dataclass(frozen=True)
class PlumbingGraph:
    """A vertex-weighted simple graph; edges are index pairs (i, j), i < j."""

    labels: tuple[str, ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        nv = len(self.labels)
        if len(self.weights) != nv:
            raise ValueError("one weight per vertex required")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < j < nv):
                raise ValueError(f"bad edge ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def is_connected(self) -> bool:
        nv = self.n_vertices
        if nv == 0:
            return True
        adj: dict[int, list[int]] = {i: [] for i in range(nv)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nv

    @property
    def b1(self) -> int:
        return len(self.edges) - self.n_vertices + 1


@dataclass(frozen=True)
class H1Result:
    """First homology of a plumbed manifold, split by origin.

    ``free_rank`` already includes the b1 of the graph; ``torsion`` lists
    invariant factors greater than 1 in divisibility order.
    """

    free_rank: int
    torsion: tuple[int, ...]
    graph_b1: int
    coker_free_rank: int

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "b1_graph": self.graph_b1,
            "coker_free_rank": self.coker_free_rank,
        }


def plumbing_graph(arr: Arrangement) -> PlumbingGraph:
    """The weighted incidence graph of an arrangement.

    Vertex order is lines 0..n, then points in lexicographic order, matching
    the row order of ``plumbing_matrix``.
    """
    graph = incidence_graph(arr)
    labels = [f"L{i}" for i in range(arr.n_lines)]
    weights = [0] * arr.n_lines
    for i in range(arr.n_lines):
        weights[i] = 1 - len(arr.points_through(i))
    for pt in arr.points:
        labels.append("P(" + ",".join(str(x) for x in pt) + ")")
        weights.append(-1)
    edges = tuple(sorted((line, arr.n_lines + idx) for line, idx in graph.edges))
    return PlumbingGraph(tuple(labels), tuple(weights), edges)


def plumbing_matrix(g: PlumbingGraph) -> IntMatrix:
    """Symmetric matrix with vertex weights on the diagonal, 1 on edges."""
    nv = g.n_vertices
    rows = [[0] * nv for _ in range(nv)]
    for i in range(nv):
        rows[i][i] = g.weights[i]
    for i, j in g.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return IntMatrix.from_rows(rows) if nv else IntMatrix(0, 0, ())


def h1_plumbed(g: PlumbingGraph) -> H1Result:
    """First homology of the 3-manifold plumbed along a connected graph."""
    if not g.is_connected():
        raise ValueError("plumbing graph must be connected")
    free, torsion = cokernel(plumbing_matrix(g))
    return H1Result(
        free_rank=g.b1 + free,
        torsion=torsion,
        graph_b1=g.b1,
        coker_free_rank=free,
    )


def h1_boundary(arr: Arrangement) -> H1Result:
    """First homology of the boundary manifold of an arrangement.

    Always free of rank b1(incidence graph) + n; any torsion or a cokernel
    rank other than n contradicts the presentation of the fundamental group
    (meridians modulo one relation), so it is raised, not returned.
    """
    res = h1_plumbed(plumbing_graph(arr))
    if res.torsion or res.coker_free_rank != arr.n:
        raise InternalContradiction(
            f"boundary homology must be free of rank b1 + {arr.n}, "
            f"got coker rank {res.coker_free_rank} and torsion {list(res.torsion)}"
        )
    return res
