"""Brute-force ground truth over small finite semirings.

Everything here enumerates full matrix spaces (or subsets of a carrier) and
tests definitions directly, so the rest of the package has an independent
oracle to agree with.  Enumerations iterate a mixed-radix counter over the
entries in row-major order; a budget refuses oversized state spaces outright
rather than sampling.
"""

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError, UnsupportedOperationError
from .invertibility import OrthogonalDecomposition, is_invertible
from .matrices import Matrix


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard cap on the number of enumerated states, and a chunk count for
    splitting the counter range into independently processed pieces."""

    max_states: int = 10**8
    chunking: int = 1

    def __post_init__(self):
        if self.max_states < 1 or self.chunking < 1:
            raise ValueError("budget needs max_states >= 1 and chunking >= 1")


DEFAULT_BUDGET = EnumerationBudget()


def _require_finite(semiring):
    if not semiring.is_finite:
        raise UnsupportedOperationError(
            f"enumeration needs a finite carrier, not {semiring.descriptor()}"
        )


def _state_count(semiring, n, budget):
    total = semiring.size ** (n * n)
    if total > budget.max_states:
        raise BudgetExceededError(
            f"{semiring.descriptor()} has {semiring.size}^{n * n} = {total} matrices, "
            f"over the budget of {budget.max_states}",
            required=total,
        )
    return total


def _chunk_ranges(total, chunks):
    step = (total + chunks - 1) // chunks
    for start in range(0, total, step):
        yield start, min(start + step, total)


def _grids(elements, n, start, stop):
    """Row-major mixed-radix decoding of counter values in [start, stop)."""
    base = len(elements)
    cells = n * n
    digits = [0] * cells
    value = start
    for pos in range(cells - 1, -1, -1):
        value, digits[pos] = divmod(value, base)
    for counter in range(start, stop):
        yield tuple(
            tuple(elements[digits[r * n + c]] for c in range(n)) for r in range(n)
        )
        pos = cells - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < base:
                break
            digits[pos] = 0
            pos -= 1


def _grid_mul(add, mul, zero, a, b, n):
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(n):
            v = arow[k]
            if v == zero:
                continue
            brow = b[k]
            for j in range(n):
                w = brow[j]
                if w == zero:
                    continue
                t = mul(v, w)
                orow[j] = t if orow[j] == zero else add(orow[j], t)
    return [tuple(r) for r in out]


def _grid_is_zero(grid, zero):
    return all(v == zero for row in grid for v in row)


def _grid_power_is_zero(add, mul, zero, grid, n, e):
    """Whether grid^e = 0 (e >= 1), by square-and-multiply with early exit.

    A product with the zero matrix is zero in any semiring, so the moment the
    accumulator or the running square hits zero (with exponent bits left) the
    final power is zero.
    """
    result = None  # identity so far
    base = grid
    while True:
        if e & 1:
            result = base if result is None else _grid_mul(add, mul, zero, result, base, n)
            if _grid_is_zero(result, zero):
                return True
        e >>= 1
        if not e:
            return False  # result is set (e started >= 1) and is nonzero
        base = _grid_mul(add, mul, zero, base, base, n)
        if _grid_is_zero(base, zero):
            return True  # a remaining bit of e multiplies the result by zero


def count_nilpotent_bruteforce(semiring, n, budget=DEFAULT_BUDGET):
    """Count matrices with A^n = 0 by scanning the whole matrix space."""
    _require_finite(semiring)
    total = _state_count(semiring, n, budget)
    elements = semiring.elements()
    add, mul, zero = semiring.add, semiring.mul, semiring.zero
    count = 0
    for start, stop in _chunk_ranges(total, budget.chunking):
        part = 0
        for grid in _grids(elements, n, start, stop):
            if _grid_power_is_zero(add, mul, zero, grid, n, n):
                part += 1
        count += part
    return count


def enumerate_gl(semiring, n, budget=DEFAULT_BUDGET):
    """All invertible n x n matrices, in counter (row-major carrier) order."""
    _require_finite(semiring)
    semiring.ensure_nondegenerate()
    total = _state_count(semiring, n, budget)
    elements = semiring.elements()
    found = []
    for start, stop in _chunk_ranges(total, budget.chunking):
        part = []
        for grid in _grids(elements, n, start, stop):
            m = Matrix._make(semiring, grid)
            if is_invertible(m):
                part.append(m)
        found.extend(part)
    return found


def orth_decomp_search(semiring, max_carrier=16):
    """Every orthogonal decomposition of 1, by exhaustive subset search.

    Scans all subsets of the nonzero carrier; results are sorted by length
    then by canonical part order.  Used to confirm both the maximality and
    the refinement property of max_orthogonal_decomposition.
    """
    _require_finite(semiring)
    semiring.ensure_nondegenerate()
    if semiring.size > max_carrier:
        raise BudgetExceededError(
            f"carrier of {semiring.descriptor()} has {semiring.size} elements, "
            f"over the subset-search cap of {max_carrier}",
            required=2 ** (semiring.size - 1),
        )
    add, mul, zero, one = semiring.add, semiring.mul, semiring.zero, semiring.one
    nonzero = [x for x in semiring.elements() if x != zero]
    found = []
    for r in range(1, len(nonzero) + 1):
        for combo in itertools.combinations(nonzero, r):
            total = combo[0]
            for x in combo[1:]:
                total = add(total, x)
            if total != one:
                continue
            if all(mul(a, b) == zero for a, b in itertools.combinations(combo, 2)):
                found.append(OrthogonalDecomposition(semiring, combo))
    found.sort(key=lambda d: (d.length, [semiring.sort_key(p) for p in d.parts]))
    return found
