"""Concrete commutative semirings and the axiom validator.

A semiring here is a value object: it names a carrier, distinguished elements
0 and 1, and two callables ``add`` / ``mul`` acting on raw carrier payloads.
Payloads are plain hashable Python values (ints, frozensets, ``math.inf``),
so structural ``==`` is exact equality in the carrier.  All instances are
immutable and safe to share.
"""

import math
import os
from dataclasses import dataclass

from .errors import (
    DegenerateSemiringError,
    FormatError,
    PreconditionError,
    UnsupportedOperationError,
)

#: Additive identity of the min-plus semiring (the "plus infinity" payload).
INF = math.inf


class Semiring:
    """Base class for concrete commutative semirings.

    Two instances compare equal iff they describe the same carrier and
    operations; elements of unequal semirings never combine.
    """

    kind = "abstract"
    is_finite = False
    size = None

    # overridden per subclass
    zero = None
    one = None

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Semiring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<semiring {self.descriptor()}>"

    def descriptor(self):
        """The textual name used in matrix files, e.g. ``chain:3``."""
        raise NotImplementedError

    @property
    def is_degenerate(self):
        return self.zero == self.one

    def ensure_nondegenerate(self):
        if self.is_degenerate:
            raise DegenerateSemiringError(
                f"{self.descriptor()} has 0 = 1; matrix operations are undefined over it"
            )

    # --- carrier ---

    def elements(self):
        """All payloads in canonical ascending order (finite carriers only)."""
        raise UnsupportedOperationError(
            f"{self.descriptor()} has an infinite carrier; cannot enumerate elements"
        )

    def contains(self, value):
        raise NotImplementedError

    def coerce(self, value):
        """Normalize and validate a payload, raising ValueError when foreign."""
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (set, frozenset)):
            value = frozenset(value)
        if not self.contains(value):
            raise ValueError(f"{value!r} is not an element of {self.descriptor()}")
        return value

    def sort_key(self, value):
        """Key realizing the canonical carrier order."""
        return value

    def element(self, value):
        return Element(self, value)

    # --- units ---

    def unit_inverse(self, value):
        """The multiplicative inverse of ``value``, or None when not a unit."""
        raise NotImplementedError

    # --- structural facts used as preconditions ---

    @property
    def is_entire(self):
        """True when the semiring has no zero divisors."""
        raise NotImplementedError

    @property
    def is_nilpotent_free(self):
        """True when x^k = 0 implies x = 0."""
        raise NotImplementedError

    def ensure_antiring(self):
        """Raise unless this is a commutative zerosumfree semiring.

        Built-ins satisfy this by construction; table semirings are checked
        once against their operation tables.
        """

    def ensure_nilpotent_free(self):
        if not self.is_nilpotent_free:
            raise PreconditionError(
                f"{self.descriptor()} has nonzero nilpotent elements"
            )

    # --- text form of single elements ---

    def format_element(self, value):
        raise NotImplementedError

    def parse_element(self, token):
        raise NotImplementedError


class Element:
    """A single carrier value tagged with its semiring.

    Supports ``+`` and ``*`` with same-semiring operands; mixing semirings
    raises ValueError.
    """

    __slots__ = ("semiring", "value")

    def __init__(self, semiring, value):
        self.semiring = semiring
        self.value = semiring.coerce(value)

    def _same(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine Element with {type(other).__name__}")
        if self.semiring != other.semiring:
            raise ValueError(
                f"semiring mismatch: {self.semiring.descriptor()} vs "
                f"{other.semiring.descriptor()}"
            )

    def __add__(self, other):
        self._same(other)
        return Element(self.semiring, self.semiring.add(self.value, other.value))

    def __mul__(self, other):
        self._same(other)
        return Element(self.semiring, self.semiring.mul(self.value, other.value))

    def is_unit(self):
        return self.semiring.unit_inverse(self.value) is not None

    def inverse(self):
        """The multiplicative inverse as an Element, or None."""
        inv = self.semiring.unit_inverse(self.value)
        return None if inv is None else Element(self.semiring, inv)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.semiring == other.semiring
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.semiring, self.value))

    def __repr__(self):
        return f"Element({self.semiring.descriptor()}, {self})"

    def __str__(self):
        return self.semiring.format_element(self.value)


def _parse_int(token, what):
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"bad {what} literal {token!r}") from None


class Chain(Semiring):
    """The chain lattice {0, ..., q-1}: addition is max, multiplication is min.

    A finite entire commutative antiring.  ``Chain(2)`` is the Boolean
    semiring and prints as ``boolean``; ``Chain(1)`` is the degenerate
    one-element semiring (accepted here, rejected by matrix operations).
    """

    kind = "chain"
    is_finite = True

    def __init__(self, q):
        if q < 1:
            raise ValueError("chain semiring needs q >= 1")
        self.q = q
        self.size = q
        self.zero = 0
        self.one = q - 1
        self.add = max
        self.mul = min

    def _key(self):
        return ("chain", self.q)

    def descriptor(self):
        return "boolean" if self.q == 2 else f"chain:{self.q}"

    def elements(self):
        return list(range(self.q))

    def contains(self, value):
        return isinstance(value, int) and 0 <= value < self.q

    def unit_inverse(self, value):
        # min(a, b) = q-1 forces a = b = q-1
        return self.one if value == self.one else None

    @property
    def is_entire(self):
        return True

    @property
    def is_nilpotent_free(self):
        return True

    def format_element(self, value):
        return str(value)

    def parse_element(self, token):
        v = _parse_int(token, self.descriptor())
        if not 0 <= v < self.q:
            raise FormatError(f"{v} out of range for {self.descriptor()}")
        return v


class Powerset(Semiring):
    """Subsets of {1..m} under union (addition) and intersection (multiplication).

    A finite commutative antiring; not entire once m >= 2 (disjoint nonempty
    sets are zero divisors).  Canonical order is by characteristic bitmask.
    """

    kind = "powerset"
    is_finite = True

    def __init__(self, m):
        if m < 0:
            raise ValueError("powerset semiring needs m >= 0")
        self.m = m
        self.size = 2**m
        self.zero = frozenset()
        self.one = frozenset(range(1, m + 1))
        self.add = frozenset.union
        self.mul = frozenset.intersection

    def _key(self):
        return ("powerset", self.m)

    def descriptor(self):
        return f"powerset:{self.m}"

    def elements(self):
        base = range(1, self.m + 1)
        return [
            frozenset(b for i, b in enumerate(base) if mask >> i & 1)
            for mask in range(self.size)
        ]

    def contains(self, value):
        return isinstance(value, frozenset) and all(
            isinstance(x, int) and 1 <= x <= self.m for x in value
        )

    def sort_key(self, value):
        return sum(1 << (x - 1) for x in value)

    def unit_inverse(self, value):
        # a ∩ b is the full set only when a = b = full set
        return self.one if value == self.one else None

    @property
    def is_entire(self):
        return self.m <= 1

    @property
    def is_nilpotent_free(self):
        return True

    def format_element(self, value):
        return "{" + ",".join(str(x) for x in sorted(value)) + "}"

    def parse_element(self, token):
        if not (token.startswith("{") and token.endswith("}")):
            raise FormatError(f"bad subset literal {token!r} (expected e.g. {{1,3}})")
        body = token[1:-1]
        items = frozenset(
            _parse_int(t, "subset member") for t in body.split(",") if t.strip()
        )
        if not self.contains(items):
            raise FormatError(f"{token} is not a subset of {{1..{self.m}}}")
        return items


class Naturals(Semiring):
    """Nonnegative integers with ordinary + and *: an infinite entire antiring."""

    kind = "naturals"

    def __init__(self):
        self.zero = 0
        self.one = 1
        self.add = int.__add__
        self.mul = int.__mul__

    def _key(self):
        return ("naturals",)

    def descriptor(self):
        return "naturals"

    def contains(self, value):
        return isinstance(value, int) and value >= 0

    def unit_inverse(self, value):
        return 1 if value == 1 else None

    @property
    def is_entire(self):
        return True

    @property
    def is_nilpotent_free(self):
        return True

    def format_element(self, value):
        return str(value)

    def parse_element(self, token):
        v = _parse_int(token, "naturals")
        if v < 0:
            raise FormatError(f"{v} is negative; not in naturals")
        return v


def _minplus_mul(a, b):
    # int + int stays exact; anything + INF is INF
    return a + b


class MinPlus(Semiring):
    """The min-plus (tropical) semiring over the integers plus infinity.

    Addition is min, multiplication is integer addition; INF is the additive
    identity and 0 the multiplicative one.  Integer payloads keep equality
    exact; every finite payload is a unit with inverse -x.
    """

    kind = "tropical"

    def __init__(self):
        self.zero = INF
        self.one = 0
        self.add = min
        self.mul = _minplus_mul

    def _key(self):
        return ("tropical",)

    def descriptor(self):
        return "tropical"

    def contains(self, value):
        return value == INF or isinstance(value, int)

    def coerce(self, value):
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, float) and value == INF:
            value = INF
        if not self.contains(value):
            raise ValueError(f"{value!r} is not an element of tropical")
        return value

    def unit_inverse(self, value):
        return None if value == INF else -value

    @property
    def is_entire(self):
        return True

    @property
    def is_nilpotent_free(self):
        return True

    def format_element(self, value):
        return "inf" if value == INF else str(value)

    def parse_element(self, token):
        if token == "inf":
            return INF
        return _parse_int(token, "tropical")


@dataclass(frozen=True)
class FiniteTables:
    """Operation tables of a finite magma pair: the raw data of a candidate semiring.

    Construction checks well-formedness only (shape and index range, with the
    offending cell named); whether the tables satisfy the semiring axioms is
    the business of :func:`validate_axioms`.
    """

    size: int
    add_table: tuple
    mul_table: tuple
    zero_index: int
    one_index: int

    def __post_init__(self):
        if self.size < 1:
            raise FormatError("table size must be >= 1")
        for name, table in (("add", self.add_table), ("mul", self.mul_table)):
            if len(table) != self.size:
                raise FormatError(f"{name} table has {len(table)} rows, expected {self.size}")
            for i, row in enumerate(table):
                if len(row) != self.size:
                    raise FormatError(
                        f"{name} table row {i} has {len(row)} entries, expected {self.size}"
                    )
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < self.size:
                        raise FormatError(
                            f"{name} table cell ({i},{j}) = {v!r} is out of range 0..{self.size - 1}"
                        )
        for name, idx in (("zero", self.zero_index), ("one", self.one_index)):
            if not isinstance(idx, int) or not 0 <= idx < self.size:
                raise FormatError(f"{name} index {idx!r} out of range 0..{self.size - 1}")


#: Laws checked by validate_axioms, grouped under the flag they support.
SEMIRING_LAWS = (
    "add_associative",
    "add_commutative",
    "add_identity",
    "mul_associative",
    "mul_identity",
    "distributive_left",
    "distributive_right",
    "annihilating_zero",
)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the exhaustive axiom scan over a finite operation table.

    ``witnesses`` maps a law name to a tuple of counterexample index tuples;
    a flag is False exactly when one of its laws has witnesses.
    """

    is_semiring: bool
    is_commutative: bool
    is_zerosumfree: bool
    is_entire: bool
    has_no_nonzero_nilpotents: bool
    witnesses: dict

    FLAGS = (
        "is_semiring",
        "is_commutative",
        "is_zerosumfree",
        "is_entire",
        "has_no_nonzero_nilpotents",
    )

    @property
    def is_commutative_antiring(self):
        return self.is_semiring and self.is_commutative and self.is_zerosumfree


def validate_axioms(tables):
    """Exhaustively check the semiring axioms and the antiring predicates.

    Scans all pairs/triples of ``tables``; every failed law gets (at least)
    its first counterexample recorded as a tuple of carrier indices.
    """
    n = tables.size
    add = tables.add_table
    mul = tables.mul_table
    zero = tables.zero_index
    one = tables.one_index
    rng = range(n)
    witnesses = {}

    def record(law, *idx):
        witnesses.setdefault(law, []).append(tuple(idx))

    for a in rng:
        if add[a][zero] != a or add[zero][a] != a:
            record("add_identity", a)
        if mul[a][one] != a or mul[one][a] != a:
            record("mul_identity", a)
        if mul[a][zero] != zero or mul[zero][a] != zero:
            record("annihilating_zero", a)
        for b in rng:
            if add[a][b] != add[b][a] and "add_commutative" not in witnesses:
                record("add_commutative", a, b)
            if mul[a][b] != mul[b][a] and "mul_commutative" not in witnesses:
                record("mul_commutative", a, b)
            if add[a][b] == zero and (a, b) != (zero, zero) and "zerosumfree" not in witnesses:
                record("zerosumfree", a, b)
            if mul[a][b] == zero and a != zero and b != zero and "entire" not in witnesses:
                record("entire", a, b)
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]] and "add_associative" not in witnesses:
                    record("add_associative", a, b, c)
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] and "mul_associative" not in witnesses:
                    record("mul_associative", a, b, c)
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] and "distributive_left" not in witnesses:
                    record("distributive_left", a, b, c)
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] and "distributive_right" not in witnesses:
                    record("distributive_right", a, b, c)

    # x nilpotent iff x^|S| = 0: the multiplicative orbit of x cycles within |S| steps
    for x in rng:
        if x == zero:
            continue
        p = x
        for k in range(2, n + 1):
            p = mul[p][x]
            if p == zero:
                record("nilpotent_free", x, k)
                break

    witnesses = {law: tuple(ws) for law, ws in witnesses.items()}
    return AxiomReport(
        is_semiring=not any(law in witnesses for law in SEMIRING_LAWS),
        is_commutative="mul_commutative" not in witnesses,
        is_zerosumfree="zerosumfree" not in witnesses,
        is_entire="entire" not in witnesses,
        has_no_nonzero_nilpotents="nilpotent_free" not in witnesses,
        witnesses=witnesses,
    )


class TableSemiring(Semiring):
    """A finite semiring given by explicit operation tables; payloads are indices.

    Elements compare by index.  The axiom report is computed lazily, once,
    and consulted by the operations whose correctness depends on the antiring
    axioms.
    """

    kind = "table"
    is_finite = True

    def __init__(self, tables, source=None):
        self.tables = tables
        self.source = source
        self.size = tables.size
        self.zero = tables.zero_index
        self.one = tables.one_index
        add_t = tables.add_table
        mul_t = tables.mul_table
        self.add = lambda a, b: add_t[a][b]
        self.mul = lambda a, b: mul_t[a][b]
        self._report = None
        self._units = None

    def _key(self):
        return (
            "table",
            self.tables.add_table,
            self.tables.mul_table,
            self.zero,
            self.one,
        )

    def descriptor(self):
        return f"table:{self.source}" if self.source else "table:<anonymous>"

    def elements(self):
        return list(range(self.size))

    def contains(self, value):
        return isinstance(value, int) and 0 <= value < self.size

    @property
    def axiom_report(self):
        if self._report is None:
            self._report = validate_axioms(self.tables)
        return self._report

    def ensure_antiring(self):
        rep = self.axiom_report
        if not rep.is_commutative_antiring:
            failed = [law for law in rep.witnesses if law != "entire" and law != "nilpotent_free"]
            raise PreconditionError(
                f"{self.descriptor()} is not a commutative antiring "
                f"(failed: {', '.join(sorted(failed))})"
            )

    @property
    def is_entire(self):
        return self.axiom_report.is_entire

    @property
    def is_nilpotent_free(self):
        return self.axiom_report.has_no_nonzero_nilpotents

    def unit_inverse(self, value):
        if self._units is None:
            units = {}
            for a in range(self.size):
                for b in range(self.size):
                    if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                        units.setdefault(a, b)
            self._units = units
        return self._units.get(value)

    def format_element(self, value):
        return str(value)

    def parse_element(self, token):
        v = _parse_int(token, "table index")
        if not 0 <= v < self.size:
            raise FormatError(f"index {v} out of range for {self.descriptor()}")
        return v


# cached built-in constructors: semirings are value objects, sharing is free

_CACHE = {}


def chain(q):
    """The chain lattice with q levels."""
    key = ("chain", q)
    if key not in _CACHE:
        _CACHE[key] = Chain(q)
    return _CACHE[key]


def boolean():
    """The Boolean semiring (the two-level chain)."""
    return chain(2)


def powerset(m):
    """The powerset lattice over {1..m}."""
    key = ("powerset", m)
    if key not in _CACHE:
        _CACHE[key] = Powerset(m)
    return _CACHE[key]


def naturals():
    key = ("naturals",)
    if key not in _CACHE:
        _CACHE[key] = Naturals()
    return _CACHE[key]


def tropical():
    """The integer min-plus semiring."""
    key = ("tropical",)
    if key not in _CACHE:
        _CACHE[key] = MinPlus()
    return _CACHE[key]


def table_semiring(tables, source=None):
    return TableSemiring(tables, source)


def list_idempotents(semiring):
    """All x with x*x = x, in canonical carrier order (finite semirings only)."""
    if not semiring.is_finite:
        raise UnsupportedOperationError(
            f"cannot list idempotents of infinite {semiring.descriptor()}"
        )
    mul = semiring.mul
    return [Element(semiring, x) for x in semiring.elements() if mul(x, x) == x]


def to_tables(semiring):
    """Materialize a finite semiring's operations as FiniteTables."""
    if not semiring.is_finite:
        raise UnsupportedOperationError(
            f"cannot materialize tables of infinite {semiring.descriptor()}"
        )
    elems = semiring.elements()
    index = {v: i for i, v in enumerate(elems)}
    add = tuple(tuple(index[semiring.add(a, b)] for b in elems) for a in elems)
    mul = tuple(tuple(index[semiring.mul(a, b)] for b in elems) for a in elems)
    return FiniteTables(
        size=len(elems),
        add_table=add,
        mul_table=mul,
        zero_index=index[semiring.zero],
        one_index=index[semiring.one],
    )


# --- text formats ---


def strip_comments(text):
    """Tokenizable lines of a config-style text: '#' comments and blanks dropped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_tables(text):
    """Parse the finite-tables text format.

    Layout: ``size k`` / ``zero i`` / ``one j`` / ``add`` + k rows / ``mul``
    + k rows.  Comments start with '#'.
    """
    lines = strip_comments(text)
    if len(lines) < 3:
        raise FormatError("tables file too short (need size/zero/one headers)")

    def header(idx, name):
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != name:
            raise FormatError(f"expected '{name} <int>' on line {idx + 1}, got {lines[idx]!r}")
        return _parse_int(parts[1], name)

    size = header(0, "size")
    zero = header(1, "zero")
    one = header(2, "one")

    pos = 3
    blocks = {}
    for name in ("add", "mul"):
        if pos >= len(lines) or lines[pos] != name:
            raise FormatError(f"expected '{name}' block at line {pos + 1}")
        pos += 1
        rows = []
        for r in range(size):
            if pos >= len(lines):
                raise FormatError(f"{name} table is missing row {r}")
            toks = lines[pos].split()
            if len(toks) != size:
                raise FormatError(
                    f"{name} table row {r} has {len(toks)} entries, expected {size}"
                )
            rows.append(tuple(_parse_int(t, f"{name}[{r}]") for t in toks))
            pos += 1
        blocks[name] = tuple(rows)
    if pos != len(lines):
        raise FormatError(f"trailing content after tables at line {pos + 1}")

    return FiniteTables(
        size=size,
        add_table=blocks["add"],
        mul_table=blocks["mul"],
        zero_index=zero,
        one_index=one,
    )


def format_tables(tables):
    lines = [f"size {tables.size}", f"zero {tables.zero_index}", f"one {tables.one_index}", "add"]
    lines += [" ".join(str(v) for v in row) for row in tables.add_table]
    lines.append("mul")
    lines += [" ".join(str(v) for v in row) for row in tables.mul_table]
    return "\n".join(lines) + "\n"


def parse_tables_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tables(fh.read())


def parse_semiring(descriptor, base_dir="."):
    """Resolve a descriptor string (``boolean``, ``chain:<q>``, ``powerset:<m>``,
    ``naturals``, ``tropical``, ``table:<path>``) to a semiring instance.

    Table paths are resolved relative to ``base_dir``.
    """
    desc = descriptor.strip()
    if desc == "boolean":
        return boolean()
    if desc == "naturals":
        return naturals()
    if desc == "tropical":
        return tropical()
    if desc.startswith("chain:"):
        q = _parse_int(desc[6:], "chain size")
        if q < 1:
            raise FormatError(f"chain size must be >= 1, got {q}")
        return chain(q)
    if desc.startswith("powerset:"):
        m = _parse_int(desc[9:], "powerset size")
        if m < 0:
            raise FormatError(f"powerset size must be >= 0, got {m}")
        return powerset(m)
    if desc.startswith("table:"):
        rel = desc[6:]
        path = rel if os.path.isabs(rel) else os.path.join(base_dir, rel)
        try:
            tables = parse_tables_file(path)
        except OSError as exc:
            raise FormatError(f"cannot read tables file {path}: {exc}") from None
        return TableSemiring(tables, source=rel)
    raise FormatError(f"unknown semiring descriptor {descriptor!r}")
