import itertools
import math
import random

import pytest

import antiring as ar
from antiring.errors import (
    DegenerateSemiringError,
    NotInvertibleError,
    UnsupportedOperationError,
)

from conftest import builtin, random_permutation


def enumerate_matrices(semiring, n):
    for flat in itertools.product(semiring.elements(), repeat=n * n):
        yield ar.Matrix(semiring, [flat[i * n:(i + 1) * n] for i in range(n)])


def test_permutation_matrices_are_invertible():
    b = ar.boolean()
    for n in (1, 2, 3, 4):
        for p in ar.Permutation.lexicographic(n):
            pm = ar.permutation_matrix(p, b)
            assert ar.is_invertible(pm)
            assert ar.invert(pm) == pm.transpose()


def test_boolean_upper_triangular_not_invertible():
    a = ar.Matrix(ar.boolean(), [[1, 1], [0, 1]])
    assert not ar.is_invertible(a)
    with pytest.raises(NotInvertibleError, match=r"\(1,2\)"):
        ar.invert(a)


def test_powerset_example_full_pipeline():
    p2 = ar.powerset(2)
    a = ar.Matrix(p2, [[{1}, {2}], [{2}, {1}]])
    assert ar.is_invertible(a)
    fact = ar.factorize_invertible(a)
    top = frozenset({1, 2})
    assert fact.diag == (top, top)
    assert [(c, p.images) for c, p in fact.terms] == [
        (frozenset({1}), (1, 2)),
        (frozenset({2}), (2, 1)),
    ]
    assert ar.invert(a) == a  # self-inverse: a @ a = identity


def test_tropical_diagonal_factorization():
    t = ar.tropical()
    a = ar.Matrix.diagonal(t, [5, -2])
    fact = ar.factorize_invertible(a)
    assert fact.diag == (5, -2)
    assert len(fact.terms) == 1
    coeff, perm = fact.terms[0]
    assert coeff == 0 and perm == ar.Permutation.identity(2)  # tropical one is 0
    assert ar.invert(a) == ar.Matrix.diagonal(t, [-5, 2])


EXHAUSTIVE_CASES = [
    ("boolean", 1),
    ("boolean", 2),
    ("boolean", 3),
    ("chain3", 2),
    ("powerset2", 2),
]


@pytest.mark.parametrize("name,n", EXHAUSTIVE_CASES)
def test_invertibility_iff_inverse_exists_exhaustive(name, n):
    sr = builtin(name)
    ident = ar.Matrix.identity(sr, n)
    invertible = 0
    for a in enumerate_matrices(sr, n):
        flag = ar.is_invertible(a)
        try:
            b = ar.invert(a)
        except NotInvertibleError:
            b = None
        assert (b is not None) == flag
        if flag:
            invertible += 1
            assert a @ b == ident and b @ a == ident
            fact = ar.factorize_invertible(a)
            assert fact.reconstruct() == a
    # group order |U(S)|^n * (n!)^k
    k = ar.max_orthogonal_decomposition(sr).length
    units = sum(1 for x in sr.elements() if sr.unit_inverse(x) is not None)
    assert invertible == units**n * math.factorial(n) ** k


def test_factorization_round_trip_random_tropical():
    rng = random.Random(11)
    t = ar.tropical()
    for _ in range(1000):
        n = rng.randint(1, 5)
        d = ar.Matrix.diagonal(t, [rng.randrange(-20, 21) for _ in range(n)])
        p = ar.permutation_matrix(random_permutation(n, rng), t)
        a = d @ p
        fact = ar.factorize_invertible(a)
        assert fact.reconstruct() == a
        ident = ar.Matrix.identity(t, n)
        b = ar.invert(a)
        assert a @ b == ident and b @ a == ident


def test_factorization_coefficients_form_orthogonal_decomposition():
    p2 = ar.powerset(2)
    a = ar.Matrix(p2, [[{1}, {2}], [{2}, {1}]])
    fact = ar.factorize_invertible(a)
    coeffs = [c for c, _ in fact.terms]
    dec = ar.OrthogonalDecomposition(p2, coeffs)  # constructor enforces the axioms
    assert dec.length == 2
    for c in coeffs:
        assert p2.mul(c, c) == c


def test_max_orthogonal_decomposition_builtins():
    assert ar.max_orthogonal_decomposition(ar.powerset(2)).parts == (
        frozenset({1}),
        frozenset({2}),
    )
    assert ar.max_orthogonal_decomposition(ar.boolean()).parts == (1,)
    assert ar.max_orthogonal_decomposition(ar.chain(5)).parts == (4,)
    assert ar.max_orthogonal_decomposition(ar.powerset(3)).length == 3


def test_max_orthogonal_decomposition_table_semiring_by_refinement():
    # the same lattice presented as an anonymous table: greedy refinement
    # must find the two singleton atoms (as indices)
    p2 = ar.powerset(2)
    ts = ar.table_semiring(ar.to_tables(p2))
    dec = ar.max_orthogonal_decomposition(ts)
    elems = p2.elements()
    assert [elems[i] for i in dec.parts] == [frozenset({1}), frozenset({2})]


def test_max_orthogonal_decomposition_errors():
    with pytest.raises(UnsupportedOperationError):
        ar.max_orthogonal_decomposition(ar.naturals())
    with pytest.raises(DegenerateSemiringError):
        ar.max_orthogonal_decomposition(ar.chain(1))


def test_orthogonal_decomposition_validation():
    p2 = ar.powerset(2)
    with pytest.raises(ValueError, match="nonzero"):
        ar.OrthogonalDecomposition(p2, [frozenset(), frozenset({1, 2})])
    with pytest.raises(ValueError, match="sum"):
        ar.OrthogonalDecomposition(p2, [frozenset({1})])
    with pytest.raises(ValueError, match="orthogonal"):
        ar.OrthogonalDecomposition(p2, [frozenset({1}), frozenset({1, 2})])
    with pytest.raises(ValueError):
        ar.OrthogonalDecomposition(p2, [])


@pytest.mark.parametrize("name,n", EXHAUSTIVE_CASES)
def test_gl_encode_decode_round_trip(name, n):
    sr = builtin(name)
    seen = set()
    for a in ar.enumerate_gl(sr, n):
        coords = ar.gl_encode(a)
        assert ar.gl_decode(coords) == a
        key = (coords.units, coords.perms)
        assert key not in seen  # injective
        seen.add(key)


def test_gl_encode_spec_examples():
    p2 = ar.powerset(2)
    a = ar.Matrix(p2, [[{1}, {2}], [{2}, {1}]])
    coords = ar.gl_encode(a)
    top = frozenset({1, 2})
    assert coords.units == (top, top)
    assert coords.atoms.parts == (frozenset({1}), frozenset({2}))
    assert coords.perms[0] == ar.Permutation.identity(2)  # atom {1} rides the identity
    assert coords.perms[1] == ar.Permutation((2, 1))  # atom {2} rides the swap

    b = ar.boolean()
    p = ar.Permutation((3, 1, 2))
    coords = ar.gl_encode(ar.permutation_matrix(p, b))
    assert coords.units == (1, 1, 1)
    assert coords.perms == (p,)


def test_gl_encode_is_group_homomorphism_when_entire():
    # trivial units and k = 1: encoding onto the symmetric group
    for sr, n in ((ar.boolean(), 3), (ar.chain(3), 2)):
        gl = ar.enumerate_gl(sr, n)
        for a in gl:
            for b in gl:
                pa = ar.gl_encode(a).perms[0]
                pb = ar.gl_encode(b).perms[0]
                assert ar.gl_encode(a @ b).perms[0] == pa * pb


def test_gl_encode_errors():
    with pytest.raises(NotInvertibleError):
        ar.gl_encode(ar.Matrix(ar.boolean(), [[1, 1], [0, 1]]))
    with pytest.raises(UnsupportedOperationError):
        ar.gl_encode(ar.Matrix.identity(ar.tropical(), 2))


def test_gl_coordinates_validation():
    p2 = ar.powerset(2)
    atoms = ar.max_orthogonal_decomposition(p2)
    ident = ar.Permutation.identity(2)
    with pytest.raises(ValueError, match="not a unit"):
        ar.GlCoordinates(p2, [frozenset({1}), frozenset({1, 2})], atoms, [ident, ident])
    with pytest.raises(ValueError, match="per atom"):
        ar.GlCoordinates(p2, [p2.one, p2.one], atoms, [ident])


def test_refinement_property_powerset3():
    """Every orthogonal decomposition's parts are sums of maximal atoms."""
    p3 = ar.powerset(3)
    maximal = ar.max_orthogonal_decomposition(p3)
    decomps = ar.orth_decomp_search(p3)
    assert len(decomps) == 5  # one per set partition of the three atoms
    assert maximal in decomps
    for dec in decomps:
        for part in dec.parts:
            touching = [a for a in maximal.parts if p3.mul(a, part) != p3.zero]
            total = p3.zero
            for a in touching:
                total = p3.add(total, a)
            assert total == part
    assert max(d.length for d in decomps) == maximal.length


def test_invertibility_failure_reports_nonunit_diagonal():
    s = ar.chain(3)
    a = ar.Matrix.diagonal(s, [1, 2])  # 1 is not a unit in chain(3)
    msg = ar.invertibility_failure(a)
    assert msg is not None and "not a unit" in msg


def test_tropical_off_diagonal_failure():
    t = ar.tropical()
    a = ar.Matrix(t, [[0, 0], [ar.INF, 0]])
    assert not ar.is_invertible(a)
    assert "off the diagonal" in ar.invertibility_failure(a)


def test_gl_with_three_atoms():
    # powerset(3) has three atoms, so GL_2 carries three permutation slots
    p3 = ar.powerset(3)
    gl = ar.enumerate_gl(p3, 2)
    assert len(gl) == 8  # (2!)^3, trivial units
    seen = set()
    for a in gl:
        coords = ar.gl_encode(a)
        assert len(coords.perms) == 3
        assert ar.gl_decode(coords) == a
        seen.add((coords.units, coords.perms))
    assert len(seen) == 8


def test_boolean_n3_gl_members_are_exactly_permutation_matrices():
    b = ar.boolean()
    gl = ar.enumerate_gl(b, 3)
    expected = {ar.permutation_matrix(p, b) for p in ar.Permutation.lexicographic(3)}
    assert set(gl) == expected
