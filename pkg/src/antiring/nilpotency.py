"""Nilpotency via digraphs: zero patterns, acyclicity, longest paths,
nilpotency index, and triangularization by vertex reordering.

The digraph of a matrix keeps only the nonzero pattern.  Over entire
semirings this pattern determines nilpotency (acyclic iff nilpotent); over
non-entire antirings it does not, so the definitive test here is always the
matrix power A^n = 0.  That bound is complete whenever the semiring is
zerosumfree with no nonzero nilpotent elements: a nonzero A^n would contain a
length-n walk with nonzero entry product, the walk repeats a vertex, the
cycle's product c has every power nonzero, and zerosumfreeness keeps every
power of A nonzero from then on.
"""

import heapq
from dataclasses import dataclass

from .errors import CyclicDigraphError, NotNilpotentError, PreconditionError
from .matrices import Permutation, conjugate_by_permutation


@dataclass(frozen=True)
class Digraph:
    """Vertices 1..n and a set of ordered edges; loops allowed."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("digraph needs n >= 1")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for (i, j) in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{self.n}")

    def out_neighbors(self):
        adj = {v: [] for v in range(1, self.n + 1)}
        for (i, j) in self.edges:
            adj[i].append(j)
        return adj

    def __str__(self):
        return "\n".join(f"{i} -> {j}" for (i, j) in sorted(self.edges))


def transitive_tournament(n):
    """Edges (i, j) for every i < j: the complete acyclic orientation."""
    return Digraph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def complete_digraph(n):
    """Both orientations of every pair of distinct vertices."""
    return Digraph(
        n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    )


def digraph_of(matrix):
    """The digraph with an edge (i, j) exactly where A(i, j) != 0."""
    return Digraph(matrix.n, matrix.support())


def topological_order(g):
    """A vertex order placing every edge forward, or None when g is cyclic.

    Returned as a Permutation p with p(k) = the k-th vertex of the order.
    Ties break toward the smallest original vertex index, so the result is
    deterministic.
    """
    indeg = {v: 0 for v in range(1, g.n + 1)}
    adj = g.out_neighbors()
    for (i, j) in g.edges:
        indeg[j] += 1
        if i == j:
            return None  # a loop is a cycle; its vertex never becomes a source
    heap = [v for v in indeg if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != g.n:
        return None
    return Permutation(order)


def is_acyclic(g):
    """True iff g has no directed cycle; a loop counts as a cycle."""
    return topological_order(g) is not None


def longest_path(g):
    """Maximum number of edges on a directed path of an acyclic digraph."""
    order = topological_order(g)
    if order is None:
        raise CyclicDigraphError("longest_path needs an acyclic digraph")
    adj = g.out_neighbors()
    dist = {v: 0 for v in range(1, g.n + 1)}
    for k in range(1, g.n + 1):
        v = order(k)
        dv = dist[v]
        for w in adj[v]:
            if dv + 1 > dist[w]:
                dist[w] = dv + 1
    return max(dist.values()) if dist else 0


def is_nilpotent(matrix):
    """True iff A^n = 0 (n the dimension).

    Requires a commutative antiring without nonzero nilpotent elements; for
    those the power test is complete (see the module docstring).  Over entire
    semirings the result is cross-checked against acyclicity of the digraph
    in debug runs.
    """
    sr = matrix.semiring
    sr.ensure_antiring()
    sr.ensure_nilpotent_free()
    result = (matrix ** matrix.n).is_zero()
    if sr.is_entire:
        assert result == is_acyclic(digraph_of(matrix)), "acyclicity criterion violated"
    return result


def nilpotency_index(matrix):
    """The least h >= 1 with A^h = 0."""
    if not is_nilpotent(matrix):
        raise NotNilpotentError("matrix is not nilpotent")
    power = matrix
    h = 1
    while not power.is_zero():
        power = power @ matrix
        h += 1
    return h


def triangularize(matrix):
    """Reorder vertices to make a nilpotent matrix strictly upper triangular.

    Returns (B, p) with B = conjugate_by_permutation(A, p) strictly upper
    triangular; p maps each vertex to its position in the topological order
    of D(A).  Only guaranteed over entire semirings, where nilpotent matrices
    have acyclic digraphs.
    """
    sr = matrix.semiring
    if not sr.is_entire:
        raise PreconditionError(
            f"triangularize needs an entire semiring; {sr.descriptor()} has zero divisors"
        )
    if not is_nilpotent(matrix):
        raise NotNilpotentError("matrix is not nilpotent")
    order = topological_order(digraph_of(matrix))
    assert order is not None  # entire + nilpotent implies acyclic
    p = order.inverse()
    return conjugate_by_permutation(matrix, p), p


def is_strictly_upper(matrix):
    """True when every entry on or below the diagonal is zero."""
    z = matrix.semiring.zero
    return all(
        v == z
        for i, row in enumerate(matrix.rows)
        for j, v in enumerate(row)
        if j <= i
    )
