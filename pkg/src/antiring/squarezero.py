"""Square-zero decompositions through arc colorings.

A matrix B squares to zero exactly when its digraph has no path of length 2,
so splitting a matrix along the classes of a path-incidence-free edge
coloring (no vertex carries a same-colored in-edge and out-edge) yields
square-zero summands.  Two explicit colorings do the work: a binary-label
coloring of the transitive tournament with ceil(log2 n) colors for nilpotent
matrices, and a subset-based coloring of the complete digraph for trace-zero
matrices.  An exhaustive backtracking search certifies the sharpness of both
color counts.
"""

import itertools
import math

from .errors import BudgetExceededError, NotNilpotentError, PreconditionError
from .matrices import Matrix, conjugate_by_permutation
from .nilpotency import complete_digraph, is_nilpotent, transitive_tournament, triangularize


class EdgeColoring:
    """A total coloring of a digraph's edges with colors 1..num_colors.

    Valid only when path-incidence-free: no vertex has an in-edge and an
    out-edge of the same color (equivalently: no two consecutive edges share
    a color).
    """

    __slots__ = ("digraph", "colors", "num_colors")

    def __init__(self, digraph, colors, num_colors):
        colors = dict(colors)
        if set(colors) != set(digraph.edges):
            raise ValueError("coloring must assign exactly the digraph's edges")
        for e, c in colors.items():
            if not (isinstance(c, int) and 1 <= c <= num_colors):
                raise ValueError(f"edge {e} has color {c!r} outside 1..{num_colors}")
        incoming = {}
        outgoing = {}
        for (u, v), c in colors.items():
            outgoing.setdefault(u, set()).add(c)
            incoming.setdefault(v, set()).add(c)
        for v in set(incoming) | set(outgoing):
            clash = incoming.get(v, set()) & outgoing.get(v, set())
            if clash:
                raise ValueError(
                    f"vertex {v} has an in-edge and an out-edge of color {min(clash)}"
                )
        self.digraph = digraph
        self.colors = colors
        self.num_colors = num_colors

    def color_classes(self):
        """Map color -> frozenset of edges; every color 1..num_colors is a key."""
        classes = {c: set() for c in range(1, self.num_colors + 1)}
        for e, c in self.colors.items():
            classes[c].add(e)
        return {c: frozenset(es) for c, es in classes.items()}

    def __repr__(self):
        return f"EdgeColoring({self.num_colors} colors, {len(self.colors)} edges)"


def tournament_coloring(n):
    """Color the transitive tournament with exactly ceil(log2 n) colors.

    Writing the vertex labels i-1 and j-1 in binary, edge (i, j) gets the
    position of the most significant bit where they differ.  Along that bit
    the tail reads 0 and the head reads 1, so no vertex can carry a
    same-colored in-edge and out-edge.
    """
    g = transitive_tournament(n)
    colors = {(i, j): ((i - 1) ^ (j - 1)).bit_length() for (i, j) in g.edges}
    return EdgeColoring(g, colors, (n - 1).bit_length())


def tracezero_capacity(n):
    """The least N whose central binomial C(N, ceil(N/2)) reaches n.

    This is the sharp number of square-zero summands needed for every n x n
    trace-zero matrix.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    big_n = 0
    while math.comb(big_n, (big_n + 1) // 2) < n:
        big_n += 1
    return big_n


def tracezero_max_dimension(k):
    """C(k, ceil(k/2)): the largest dimension k square-zero summands can cover.

    Grows like 2^k / sqrt(k) by Stirling; this function stays exact and
    leaves the asymptotics to the reader.
    """
    if k < 0:
        raise ValueError("summand count must be >= 0")
    return math.comb(k, (k + 1) // 2)


def complete_digraph_coloring(n):
    """Color the complete digraph with N = tracezero_capacity(n) colors.

    Vertex i receives the i-th ceil(N/2)-subset S_i of {1..N} in
    lexicographic order; edge (i, j) gets the smallest element of S_i - S_j
    (nonempty since the subsets are distinct and equal-sized).  A shared
    color c on consecutive edges (i, j), (j, k) would need both c not in S_j
    and c in S_j.
    """
    g = complete_digraph(n)
    big_n = tracezero_capacity(n)
    subsets = list(itertools.combinations(range(1, big_n + 1), (big_n + 1) // 2))[:n]
    sets = [frozenset(s) for s in subsets]
    colors = {(i, j): min(sets[i - 1] - sets[j - 1]) for (i, j) in g.edges}
    return EdgeColoring(g, colors, big_n)


def min_coloring_search(g, num_colors, max_states=10**8):
    """Exhaustive search for a path-incidence-free coloring with <= num_colors.

    Returns an EdgeColoring or None; None certifies that the digraph needs
    more colors.  Backtracking over the sorted edge list with incidence
    pruning and ascending first-use of new colors; the first solution in
    canonical order is returned.  Refuses outright (never truncates) when
    num_colors^edges exceeds max_states.
    """
    edges = sorted(g.edges)
    if num_colors < 0:
        raise ValueError("color count must be >= 0")
    states = num_colors ** len(edges) if edges else 1
    if states > max_states:
        raise BudgetExceededError(
            f"search space {num_colors}^{len(edges)} = {states} exceeds budget {max_states}",
            required=states,
        )
    # multiplicity counts: several in-edges (or out-edges) of a vertex may
    # legitimately share a color, so unwinding must not erase siblings
    incoming = {v: [0] * (num_colors + 1) for v in range(1, g.n + 1)}
    outgoing = {v: [0] * (num_colors + 1) for v in range(1, g.n + 1)}
    assignment = {}

    def assign(idx, used):
        if idx == len(edges):
            return True
        u, v = edges[idx]
        cap = min(num_colors, used + 1)  # colors are interchangeable: try one new color only
        for c in range(1, cap + 1):
            if incoming[u][c] or outgoing[v][c]:
                continue
            assignment[(u, v)] = c
            outgoing[u][c] += 1
            incoming[v][c] += 1
            if assign(idx + 1, max(used, c)):
                return True
            outgoing[u][c] -= 1
            incoming[v][c] -= 1
            del assignment[(u, v)]
        return False

    if not assign(0, 0):
        return None
    return EdgeColoring(g, assignment, num_colors)


class SquareZeroDecomposition:
    """Matrices B_1..B_r with each B_i^2 = 0 and sum(B_i) equal to the source."""

    __slots__ = ("source", "summands")

    def __init__(self, source, summands):
        summands = tuple(summands)
        total = Matrix.zeros(source.semiring, source.n)
        for b in summands:
            if not (b @ b).is_zero():
                raise ValueError("summand does not square to zero")
            total = total + b
        if total != source:
            raise ValueError("summands do not sum to the source matrix")
        self.source = source
        self.summands = summands

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __repr__(self):
        return f"SquareZeroDecomposition({len(self.summands)} summands, n={self.source.n})"


def _restrict_to_edges(matrix, edges):
    """A copy keeping only the entries at the given 1-based positions."""
    z = matrix.semiring.zero
    rows = tuple(
        tuple(
            v if (i + 1, j + 1) in edges else z
            for j, v in enumerate(row)
        )
        for i, row in enumerate(matrix.rows)
    )
    return Matrix._make(matrix.semiring, rows)


def decompose_nilpotent(matrix):
    """Split a nilpotent matrix into at most ceil(log2 n) square-zero summands.

    The matrix is triangularized, split along the tournament coloring's
    classes, and conjugated back; classes with empty support are dropped.
    Inside one class no two edges are consecutive, so every term of a
    squared summand has a zero factor: square-zeroness needs no entireness,
    only the triangularization step does.
    """
    n = matrix.n
    if n == 1:
        if not is_nilpotent(matrix):
            raise NotNilpotentError("matrix is not nilpotent")
        return SquareZeroDecomposition(matrix, ())
    upper, p = triangularize(matrix)
    pinv = p.inverse()
    coloring = tournament_coloring(n)
    support = upper.support()
    summands = []
    for _, edges in sorted(coloring.color_classes().items()):
        piece = _restrict_to_edges(upper, edges & support)
        if not piece.is_zero():
            summands.append(conjugate_by_permutation(piece, pinv))
    return SquareZeroDecomposition(matrix, summands)


def decompose_trace_zero(matrix):
    """Split a trace-zero matrix into at most tracezero_capacity(n) square-zero
    summands, with no entireness assumption.

    Works directly along the complete-digraph coloring classes; a nonzero
    diagonal entry is rejected (its digraph has a loop, so the matrix is not
    a sum of nilpotent matrices at all).
    """
    sr = matrix.semiring
    sr.ensure_antiring()
    sr.ensure_nilpotent_free()
    for i in range(1, matrix.n + 1):
        v = matrix.entry(i, i)
        if v != sr.zero:
            raise PreconditionError(
                f"diagonal entry A({i},{i}) = {sr.format_element(v)} is nonzero; "
                f"only trace-zero matrices decompose into square-zero summands"
            )
    if matrix.n == 1:
        return SquareZeroDecomposition(matrix, ())
    coloring = complete_digraph_coloring(matrix.n)
    support = matrix.support()
    summands = []
    for _, edges in sorted(coloring.color_classes().items()):
        piece = _restrict_to_edges(matrix, edges & support)
        if not piece.is_zero():
            summands.append(piece)
    return SquareZeroDecomposition(matrix, summands)
