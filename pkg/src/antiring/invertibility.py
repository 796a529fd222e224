"""Invertibility over commutative antirings.

An invertible matrix factors as D * sum(a_s * P_s): an invertible diagonal
times an orthogonal combination of permutation matrices.  This module tests
invertibility, computes that factorization and the explicit inverse, finds
the maximal orthogonal decomposition of 1, and encodes/decodes the resulting
semidirect-product coordinates of the group of invertible matrices.
"""

import itertools

from .errors import NotInvertibleError, UnsupportedOperationError
from .matrices import Matrix, Permutation


class OrthogonalDecomposition:
    """Nonzero elements summing to 1 with pairwise products 0.

    Parts are kept in canonical carrier order.  Each part is necessarily
    idempotent: a_i = a_i * sum(a_j) = a_i^2.
    """

    __slots__ = ("semiring", "parts")

    def __init__(self, semiring, parts):
        parts = tuple(sorted((semiring.coerce(p) for p in parts), key=semiring.sort_key))
        if not parts:
            raise ValueError("orthogonal decomposition needs at least one part")
        zero, one = semiring.zero, semiring.one
        add, mul = semiring.add, semiring.mul
        if any(p == zero for p in parts):
            raise ValueError("orthogonal decomposition parts must be nonzero")
        if len(set(parts)) != len(parts):
            raise ValueError("orthogonal decomposition parts must be distinct")
        total = parts[0]
        for p in parts[1:]:
            total = add(total, p)
        if total != one:
            raise ValueError(
                f"parts sum to {semiring.format_element(total)}, not 1"
            )
        for a, b in itertools.combinations(parts, 2):
            if mul(a, b) != zero:
                raise ValueError(
                    f"parts {semiring.format_element(a)} and "
                    f"{semiring.format_element(b)} are not orthogonal"
                )
        for p in parts:
            assert mul(p, p) == p, "decomposition part is not idempotent"
        self.semiring = semiring
        self.parts = parts

    @property
    def length(self):
        return len(self.parts)

    def __eq__(self, other):
        return (
            isinstance(other, OrthogonalDecomposition)
            and self.semiring == other.semiring
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.semiring, self.parts))

    def __repr__(self):
        body = ", ".join(self.semiring.format_element(p) for p in self.parts)
        return f"OrthogonalDecomposition({self.semiring.descriptor()}, [{body}])"


class InvertibleFactorization:
    """The data (D; {(a_s, s)}) of the invertibility factorization.

    ``diag`` is the diagonal of D (each entry a unit); ``terms`` pairs each
    nonzero coefficient with its permutation, sorted by the permutation's
    one-line form.  The coefficients form an orthogonal decomposition of 1.
    """

    __slots__ = ("semiring", "n", "diag", "terms")

    def __init__(self, semiring, diag, terms):
        diag = tuple(semiring.coerce(v) for v in diag)
        terms = tuple((semiring.coerce(a), p) for a, p in terms)
        n = len(diag)
        for v in diag:
            if semiring.unit_inverse(v) is None:
                raise ValueError(f"diagonal entry {semiring.format_element(v)} is not a unit")
        for _, p in terms:
            if p.n != n:
                raise ValueError("term permutation size does not match the diagonal")
        # validates nonzero, sum = 1, pairwise orthogonal
        OrthogonalDecomposition(semiring, [a for a, _ in terms])
        self.semiring = semiring
        self.n = n
        self.diag = diag
        self.terms = tuple(sorted(terms, key=lambda t: t[1].images))

    def reconstruct(self):
        """D * sum(a_s * P_s) as a Matrix."""
        sr = self.semiring
        add, mul, zero = sr.add, sr.mul, sr.zero
        rows = [[zero] * self.n for _ in range(self.n)]
        for a, p in self.terms:
            for i in range(1, self.n + 1):
                j = p(i)
                cur = rows[i - 1][j - 1]
                rows[i - 1][j - 1] = a if cur == zero else add(cur, a)
        for i in range(self.n):
            d = self.diag[i]
            rows[i] = [mul(d, v) if v != zero else zero for v in rows[i]]
        return Matrix._make(sr, tuple(tuple(r) for r in rows))

    def __repr__(self):
        return (
            f"InvertibleFactorization(n={self.n}, "
            f"terms={[(self.semiring.format_element(a), p.images) for a, p in self.terms]})"
        )


class GlCoordinates:
    """Semidirect-product coordinates of an invertible matrix.

    ``units`` is the diagonal of D; ``perms`` holds one permutation per atom
    of the recorded maximal orthogonal decomposition (``atoms``), in the
    atoms' canonical order.
    """

    __slots__ = ("semiring", "units", "atoms", "perms")

    def __init__(self, semiring, units, atoms, perms):
        units = tuple(semiring.coerce(u) for u in units)
        perms = tuple(perms)
        for u in units:
            if semiring.unit_inverse(u) is None:
                raise ValueError(f"{semiring.format_element(u)} is not a unit")
        if atoms.semiring != semiring:
            raise ValueError("atom decomposition belongs to a different semiring")
        if len(perms) != atoms.length:
            raise ValueError(
                f"need one permutation per atom: got {len(perms)} for {atoms.length} atoms"
            )
        n = len(units)
        for p in perms:
            if p.n != n:
                raise ValueError("permutation size does not match the unit vector")
        self.semiring = semiring
        self.units = units
        self.atoms = atoms
        self.perms = perms

    def __eq__(self, other):
        return (
            isinstance(other, GlCoordinates)
            and self.semiring == other.semiring
            and self.units == other.units
            and self.atoms == other.atoms
            and self.perms == other.perms
        )

    def __hash__(self):
        return hash((self.semiring, self.units, self.atoms, self.perms))

    def __repr__(self):
        return f"GlCoordinates(units={self.units}, perms={[p.images for p in self.perms]})"


def invertibility_failure(matrix):
    """None when the matrix is invertible, else a message naming the violation.

    Invertibility over a commutative antiring: A*A^T and A^T*A are diagonal
    with every diagonal entry a unit.
    """
    matrix.semiring.ensure_antiring()
    sr = matrix.semiring
    zero = sr.zero
    at = matrix.transpose()
    for name, prod in (("A*A^T", matrix @ at), ("A^T*A", at @ matrix)):
        for i in range(1, prod.n + 1):
            for j in range(1, prod.n + 1):
                v = prod.entry(i, j)
                if i != j and v != zero:
                    return (
                        f"({name})({i},{j}) = {sr.format_element(v)} is nonzero "
                        f"off the diagonal"
                    )
            d = prod.entry(i, i)
            if sr.unit_inverse(d) is None:
                return f"({name})({i},{i}) = {sr.format_element(d)} is not a unit"
    return None


def is_invertible(matrix):
    return invertibility_failure(matrix) is None


def _candidate_permutations(supports):
    """Permutation images drawn row-by-row from the nonzero column sets.

    Yields image tuples in lexicographic order; the support sets of an
    invertible matrix are tiny, so this never comes near n! work.
    """
    n = len(supports)
    images = [0] * n
    used = [False] * (n + 1)

    def extend(i):
        if i == n:
            yield tuple(images)
            return
        for j in supports[i]:
            if not used[j]:
                used[j] = True
                images[i] = j
                yield from extend(i + 1)
                used[j] = False

    yield from extend(0)


def factorize_invertible(matrix):
    """Factor an invertible matrix as D * sum(a_s * P_s).

    Row sums give the diagonal: l_i = sum_k A(i,k) and D = Diag(l_1..l_n).
    With L = prod(l_i), each permutation s in the row supports contributes
    a_s = L^-1 * prod_i A(i, s(i)); zero coefficients are dropped.  The
    result reconstructs the input exactly (checked).
    """
    reason = invertibility_failure(matrix)
    if reason is not None:
        raise NotInvertibleError(f"matrix is not invertible: {reason}", reason=reason)
    sr = matrix.semiring
    add, mul, zero = sr.add, sr.mul, sr.zero
    n = matrix.n

    diag = []
    for row in matrix.rows:
        l = row[0]
        for v in row[1:]:
            l = add(l, v)
        diag.append(l)
    big_l = diag[0]
    for l in diag[1:]:
        big_l = mul(big_l, l)
    big_l_inv = sr.unit_inverse(big_l)
    assert big_l_inv is not None  # products of row sums of invertible A are units

    supports = [
        [j + 1 for j, v in enumerate(row) if v != zero] for row in matrix.rows
    ]
    terms = []
    for images in _candidate_permutations(supports):
        prod = big_l_inv
        for i, j in enumerate(images):
            prod = mul(prod, matrix.rows[i][j - 1])
            if prod == zero:
                break
        if prod != zero:
            terms.append((prod, Permutation(images)))

    fact = InvertibleFactorization(sr, diag, terms)
    assert fact.reconstruct() == matrix, "factorization failed to reconstruct its input"
    return fact


def invert(matrix):
    """The two-sided inverse of an invertible matrix.

    Built from the factorization: B = sum_s a_s * Diag(d_{s^-1(1)}^-1, ...) * P_s^T,
    which places a_s * d_j^-1 at position (s(j), j).  AB = BA = I is checked.
    """
    fact = factorize_invertible(matrix)
    sr = matrix.semiring
    add, mul, zero = sr.add, sr.mul, sr.zero
    n = matrix.n
    dinv = [sr.unit_inverse(d) for d in fact.diag]
    rows = [[zero] * n for _ in range(n)]
    for a, p in fact.terms:
        for j in range(1, n + 1):
            i = p(j)
            v = mul(a, dinv[j - 1])
            cur = rows[i - 1][j - 1]
            rows[i - 1][j - 1] = v if cur == zero else add(cur, v)
    inverse = Matrix._make(sr, tuple(tuple(r) for r in rows))
    ident = Matrix.identity(sr, n)
    assert matrix @ inverse == ident and inverse @ matrix == ident
    return inverse


def _greedy_refinement(semiring):
    """Refine {1} by splitting parts until no part splits further.

    A split of a part e is a pair (x, y) of nonzero elements with x + y = e
    and x*y = 0; zerosumfreeness makes x and y automatically orthogonal to
    the other parts, and any maximal refinement is the unique maximal
    decomposition.  Only idempotents can appear as parts, so only idempotent
    pairs are scanned.
    """
    mul, add, zero = semiring.mul, semiring.add, semiring.zero
    idem = [x for x in semiring.elements() if mul(x, x) == x and x != zero]
    parts = [semiring.one]
    changed = True
    while changed:
        changed = False
        for idx, e in enumerate(parts):
            found = None
            for x in idem:
                for y in idem:
                    if add(x, y) == e and mul(x, y) == zero:
                        found = (x, y)
                        break
                if found:
                    break
            if found:
                parts[idx:idx + 1] = [found[0], found[1]]
                changed = True
                break
    return parts


def max_orthogonal_decomposition(semiring):
    """The unique orthogonal decomposition of 1 of maximal length.

    Chains are entire, so theirs is {1}; for the powerset lattice it is the
    singleton sets.  Table semirings go through greedy refinement, which is
    exhaustive in effect: every decomposition refines to the maximal one.
    """
    if not semiring.is_finite:
        raise UnsupportedOperationError(
            f"maximal orthogonal decomposition needs a finite carrier, "
            f"not {semiring.descriptor()}"
        )
    semiring.ensure_nondegenerate()
    semiring.ensure_antiring()
    if semiring.kind == "chain":
        parts = [semiring.one]
    elif semiring.kind == "powerset":
        parts = [frozenset([x]) for x in range(1, semiring.m + 1)]
    else:
        parts = _greedy_refinement(semiring)
    return OrthogonalDecomposition(semiring, parts)


def gl_encode(matrix):
    """Coordinates (units, perms) of an invertible matrix over a finite semiring.

    For each atom e of the maximal orthogonal decomposition, e*A collapses to
    e*D*P for exactly one permutation P: atoms admit no further splitting.
    """
    sr = matrix.semiring
    if not sr.is_finite:
        raise UnsupportedOperationError(
            f"gl_encode needs a finite semiring, not {sr.descriptor()}"
        )
    fact = factorize_invertible(matrix)
    atoms = max_orthogonal_decomposition(sr)
    mul, zero = sr.mul, sr.zero
    perms = []
    for e in atoms.parts:
        matching = [p for a, p in fact.terms if mul(e, a) != zero]
        assert len(matching) == 1, "atom met several factorization coefficients"
        perms.append(matching[0])
    return GlCoordinates(sr, fact.diag, atoms, perms)


def gl_decode(coords):
    """Rebuild the matrix D * sum_t(e_t * P_t) from its coordinates."""
    sr = coords.semiring
    add, mul, zero = sr.add, sr.mul, sr.zero
    n = len(coords.units)
    rows = [[zero] * n for _ in range(n)]
    for e, p in zip(coords.atoms.parts, coords.perms):
        for i in range(1, n + 1):
            j = p(i)
            cur = rows[i - 1][j - 1]
            rows[i - 1][j - 1] = e if cur == zero else add(cur, e)
    for i in range(n):
        d = coords.units[i]
        rows[i] = [mul(d, v) if v != zero else zero for v in rows[i]]
    return Matrix._make(sr, tuple(tuple(r) for r in rows))
