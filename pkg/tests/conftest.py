import itertools

import pytest

import antiring as ar

#: One representative of every built-in family.
BUILTINS = ("boolean", "chain3", "powerset2", "naturals", "tropical")


def builtin(name):
    return {
        "boolean": ar.boolean(),
        "chain3": ar.chain(3),
        "powerset2": ar.powerset(2),
        "naturals": ar.naturals(),
        "tropical": ar.tropical(),
    }[name]


def random_value(semiring, rng):
    """A random payload, zero included."""
    kind = semiring.kind
    if kind == "chain":
        return rng.randrange(semiring.q)
    if kind == "powerset":
        return frozenset(x for x in range(1, semiring.m + 1) if rng.random() < 0.5)
    if kind == "naturals":
        return rng.randrange(0, 8)
    if kind == "tropical":
        return ar.INF if rng.random() < 0.3 else rng.randrange(-9, 10)
    if kind == "table":
        return rng.randrange(semiring.size)
    raise AssertionError(kind)


def random_nonzero(semiring, rng):
    while True:
        v = random_value(semiring, rng)
        if v != semiring.zero:
            return v


def random_matrix(semiring, n, rng):
    return ar.Matrix(
        semiring, [[random_value(semiring, rng) for _ in range(n)] for _ in range(n)]
    )


def random_permutation(n, rng):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return ar.Permutation(images)


def random_nilpotent(semiring, n, rng, density=0.5):
    """A random strictly upper triangular matrix conjugated by a random
    permutation: nilpotent by construction."""
    rows = [[semiring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i][j] = random_nonzero(semiring, rng)
    upper = ar.Matrix(semiring, rows)
    return ar.conjugate_by_permutation(upper, random_permutation(n, rng))


def all_boolean_matrices(n):
    sr = ar.boolean()
    for bits in itertools.product((0, 1), repeat=n * n):
        yield ar.Matrix(sr, [bits[i * n:(i + 1) * n] for i in range(n)])


@pytest.fixture(scope="session")
def boolean4_nilpotents():
    """All 543 nilpotent boolean 4x4 matrices.

    The full 65536 are scanned, checking the power test against digraph
    acyclicity on every single one (the entire-case criterion at n = 4).
    """
    found = []
    for m in all_boolean_matrices(4):
        by_power = (m**4).is_zero()
        assert by_power == ar.is_acyclic(ar.digraph_of(m))
        if by_power:
            found.append(m)
    assert len(found) == 543
    return found
