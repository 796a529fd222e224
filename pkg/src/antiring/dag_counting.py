"""Counting nilpotent matrices over finite entire antirings.

Over an entire antiring with q elements, a nilpotent matrix is exactly a
labeled acyclic digraph pattern with each of its r edges weighted by one of
the q-1 nonzero values.  So the count is A_n(q-1), where A_n(x) is the
generating polynomial of labeled acyclic digraphs on n vertices by edge
count.  A_n is computed two independent ways, by the inclusion-exclusion
recurrence over source sets

    A_n(x) = sum_{m=1..n} (-1)^(m-1) C(n,m) (1+x)^(m(n-m)) A_{n-m}(x)

and by the closed sum over ordered sequences of block sizes; the two routes
are cross-checked in the tests (A_n(1) is OEIS A003024: 1, 1, 3, 25, 543, ...).

Published tables of these polynomials are not all reliable: the 4-vertex
polynomial has constant term -1 (the count 543 at q = 2 pins it down), and
printed 6-vertex rows circulate with wrong signs.  The recurrence plus
brute-force enumeration are the ground truth here.
"""

import functools
import math

from dataclasses import dataclass


class IntPolynomial:
    """A polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored low degree first with no trailing zeros; the
    zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def one_plus_x_power(cls, e):
        """(1 + x)^e via binomial coefficients."""
        return cls(math.comb(e, i) for i in range(e + 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift(self, c):
        """The polynomial p(x + c), exactly."""
        out = [0] * len(self.coeffs)
        for r, a in enumerate(self.coeffs):
            if a:
                power = 1
                for j in range(r, -1, -1):
                    out[j] += a * math.comb(r, j) * power
                    power *= c
        return IntPolynomial(out)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPolynomial(0)"
        body = " + ".join(
            f"{c}*x^{d}" for d, c in enumerate(self.coeffs) if c
        )
        return f"IntPolynomial({body})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts with a fixed sum."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"partition part {p!r} must be a positive integer")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} are not weakly decreasing")

    @property
    def n(self):
        return sum(self.parts)

    def orderings(self):
        """Number of distinct sequences obtained by rearranging the parts."""
        count = math.factorial(len(self.parts))
        for v in set(self.parts):
            count //= math.factorial(self.parts.count(v))
        return count


def partitions(n):
    """All partitions of n in reverse-lexicographic order; partitions(0) = [()]."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    out = []

    def descend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            descend(remaining - p, p, prefix)
            prefix.pop()

    descend(n, n, [])
    return out


@functools.lru_cache(maxsize=None)
def acyclic_polynomial(n):
    """A_n(x) by the source-set recurrence; A_0 = 1."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    if n == 0:
        return IntPolynomial([1])
    total = IntPolynomial()
    for m in range(1, n + 1):
        sign = 1 if m % 2 == 1 else -1
        term = IntPolynomial.one_plus_x_power(m * (n - m)) * acyclic_polynomial(n - m)
        total = total + term * (sign * math.comb(n, m))
    return total


def acyclic_polynomial_partition_form(n):
    """A_n(x) as the closed sum over block-size sequences.

    The sum runs over ordered sequences of positive block sizes; iterating
    unordered partitions therefore weights each by its number of distinct
    orderings.
    """
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    total = IntPolynomial()
    for mu in partitions(n):
        k = len(mu.parts)
        coeff = (1 if (n - k) % 2 == 0 else -1) * math.factorial(n) * mu.orderings()
        for p in mu.parts:
            coeff //= math.factorial(p)
        exponent = (n * n - sum(p * p for p in mu.parts)) // 2
        total = total + IntPolynomial.one_plus_x_power(exponent) * coeff
    return total


def nilpotent_count_polynomial(n):
    """A_n(q-1) as a polynomial in q (exact binomial expansion)."""
    return acyclic_polynomial(n).shift(-1)


def count_nilpotent(n, q):
    """The number of nilpotent n x n matrices over a finite entire commutative
    antiring with q elements: A_n(q-1)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if q < 1:
        raise ValueError("carrier size must be >= 1")
    return acyclic_polynomial(n).evaluate(q - 1)
