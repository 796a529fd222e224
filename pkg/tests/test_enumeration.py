import pytest

import antiring as ar
from antiring.errors import BudgetExceededError, UnsupportedOperationError


def test_brute_force_counts():
    assert ar.count_nilpotent_bruteforce(ar.boolean(), 2) == 3
    assert ar.count_nilpotent_bruteforce(ar.boolean(), 3) == 25
    assert ar.count_nilpotent_bruteforce(ar.chain(3), 2) == 5
    assert ar.count_nilpotent_bruteforce(ar.powerset(2), 2) == 9


def test_brute_force_agrees_with_formula():
    for n, q in ((2, 2), (2, 3), (3, 2), (3, 3)):
        assert ar.count_nilpotent_bruteforce(ar.chain(q), n) == ar.count_nilpotent(n, q)


def test_enumerate_gl_members():
    b = ar.boolean()
    gl = ar.enumerate_gl(b, 2)
    assert len(gl) == 2
    expected = {ar.permutation_matrix(p, b) for p in ar.Permutation.lexicographic(2)}
    assert set(gl) == expected

    c3 = ar.chain(3)
    gl = ar.enumerate_gl(c3, 2)
    assert [m.rows for m in gl] == [((0, 2), (2, 0)), ((2, 0), (0, 2))]

    assert len(ar.enumerate_gl(ar.powerset(2), 2)) == 4


def test_enumerate_gl_round_trips():
    for sr, n in ((ar.boolean(), 3), (ar.powerset(2), 2)):
        ident = ar.Matrix.identity(sr, n)
        for a in ar.enumerate_gl(sr, n):
            b = ar.invert(a)
            assert a @ b == ident and b @ a == ident
            assert ar.factorize_invertible(a).reconstruct() == a


def test_orth_decomp_search():
    b = ar.boolean()
    found = ar.orth_decomp_search(b)
    assert [d.parts for d in found] == [(1,)]

    p2 = ar.powerset(2)
    found = ar.orth_decomp_search(p2)
    assert len(found) == 2
    assert found[0].parts == (frozenset({1, 2}),)
    assert found[1].parts == (frozenset({1}), frozenset({2}))

    assert len(ar.orth_decomp_search(ar.powerset(3))) == 5
    assert [d.parts for d in ar.orth_decomp_search(ar.chain(5))] == [(4,)]


def test_search_confirms_maximal_decomposition():
    for sr in (ar.boolean(), ar.chain(3), ar.powerset(2), ar.powerset(3)):
        found = ar.orth_decomp_search(sr)
        maximal = ar.max_orthogonal_decomposition(sr)
        assert maximal in found
        assert maximal.length == max(d.length for d in found)
        # uniqueness of the maximal length
        assert sum(1 for d in found if d.length == maximal.length) == 1


def test_orth_decomp_search_carrier_cap():
    with pytest.raises(BudgetExceededError):
        ar.orth_decomp_search(ar.powerset(5))  # 32 elements
    with pytest.raises(UnsupportedOperationError):
        ar.orth_decomp_search(ar.tropical())


def test_chunking_independence():
    base = ar.count_nilpotent_bruteforce(ar.chain(3), 2)
    for chunks in (2, 3, 7, 50, 81, 200):
        budget = ar.EnumerationBudget(chunking=chunks)
        assert ar.count_nilpotent_bruteforce(ar.chain(3), 2, budget=budget) == base
    gl_base = ar.enumerate_gl(ar.powerset(2), 2)
    gl_chunked = ar.enumerate_gl(ar.powerset(2), 2, budget=ar.EnumerationBudget(chunking=13))
    assert gl_base == gl_chunked


def test_budget_refusal_is_upfront():
    budget = ar.EnumerationBudget(max_states=100)
    with pytest.raises(BudgetExceededError) as exc:
        ar.count_nilpotent_bruteforce(ar.boolean(), 3, budget=budget)
    assert exc.value.required == 512
    with pytest.raises(BudgetExceededError):
        ar.enumerate_gl(ar.boolean(), 3, budget=budget)


def test_infinite_carriers_refused():
    with pytest.raises(UnsupportedOperationError):
        ar.count_nilpotent_bruteforce(ar.naturals(), 2)
    with pytest.raises(UnsupportedOperationError):
        ar.enumerate_gl(ar.tropical(), 2)


def test_budget_validation():
    with pytest.raises(ValueError):
        ar.EnumerationBudget(max_states=0)
    with pytest.raises(ValueError):
        ar.EnumerationBudget(chunking=0)
