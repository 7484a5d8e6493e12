"""Finite semirings and semimodules presented by explicit operation tables.

Carriers are index sets ``0..size-1``.  The distinguished elements ``zero``
and ``one`` are stored as indices and are not forced to positions 0 and 1,
so imported tables keep their original numbering.  Row index is always the
left operand.

Validation scans every axiom over all element tuples and reports each
violated axiom with a witness, not only the first failure.  Structures are
immutable once built and safe to share between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

Table = tuple[tuple[int, ...], ...]


class SizeMismatch(ValueError):
    """Table data does not have the declared shape, or the size is too small."""


class BaseMismatch(ValueError):
    """A semimodule was combined with a semiring it is not defined over."""


@dataclass(frozen=True)
class AxiomViolation:
    """A violated axiom together with a witness tuple of element indices."""

    axiom: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        inner = ", ".join(str(i) for i in self.witness)
        return f"{self.axiom}({inner})"


class InvalidStructure(ValueError):
    """Validation failed; ``violations`` lists every broken axiom."""

    def __init__(self, kind: str, name: str, violations: Sequence[AxiomViolation]):
        self.kind = kind
        self.name = name
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid {kind} {name!r}: {detail}")


@dataclass(frozen=True)
class FiniteSemiring:
    """Commutative semiring on ``0..size-1`` given by addition/multiplication tables."""

    size: int
    add_table: Table
    mul_table: Table
    zero: int
    one: int
    name: str = ""

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def elements(self) -> range:
        return range(self.size)

    def power(self, a: int, k: int) -> int:
        """k-fold product of a (k = 0 gives one)."""
        out = self.one
        for _ in range(k):
            out = self.mul_table[out][a]
        return out

    def repeat_add(self, a: int, k: int) -> int:
        """k-fold sum of a (k = 0 gives zero)."""
        out = self.zero
        for _ in range(k):
            out = self.add_table[out][a]
        return out


@dataclass(frozen=True)
class FiniteSemimodule:
    """Additive monoid on ``0..size-1`` with a scalar action of ``base``.

    ``action_table[s][x]`` is the product of scalar ``s`` with element ``x``.
    """

    base: FiniteSemiring
    size: int
    add_table: Table
    action_table: Table
    zero: int
    name: str = ""

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def act(self, s: int, x: int) -> int:
        return self.action_table[s][x]

    def elements(self) -> range:
        return range(self.size)

    def repeat_add(self, x: int, k: int) -> int:
        out = self.zero
        for _ in range(k):
            out = self.add_table[out][x]
        return out


Carrier = Union[FiniteSemiring, FiniteSemimodule]


@dataclass(frozen=True)
class Subset:
    """An index set over the carrier of a semiring or semimodule."""

    parent: Carrier
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.members if not 0 <= i < self.parent.size]
        if bad:
            raise ValueError(f"subset members {sorted(bad)} outside carrier 0..{self.parent.size - 1}")

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def same_semiring(a: FiniteSemiring, b: FiniteSemiring) -> bool:
    """Structural equality, ignoring the name label."""
    return (a.size, a.zero, a.one, a.add_table, a.mul_table) == (
        b.size,
        b.zero,
        b.one,
        b.add_table,
        b.mul_table,
    )


def same_semimodule(a: FiniteSemimodule, b: FiniteSemimodule) -> bool:
    return (
        a.size == b.size
        and a.zero == b.zero
        and a.add_table == b.add_table
        and a.action_table == b.action_table
        and same_semiring(a.base, b.base)
    )


def _parse_table(rows: object, n_rows: int, n_cols: int, what: str) -> Table:
    if not isinstance(rows, (list, tuple)) or len(rows) != n_rows:
        raise SizeMismatch(f"{what} table must have {n_rows} rows")
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != n_cols:
            raise SizeMismatch(f"{what} table row {r} must have {n_cols} entries")
        out.append(tuple(row))
    return tuple(out)


def _entry_violations(table: Table, size: int, axiom: str) -> list[AxiomViolation]:
    out = []
    for r, row in enumerate(table):
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                out.append(AxiomViolation(axiom, (r, c)))
    return out


def _triples(na: int, nb: int, nc: int) -> Iterator[tuple[int, int, int]]:
    for a in range(na):
        for b in range(nb):
            for c in range(nc):
                yield (a, b, c)


def _first_noncommutative(table: Table, n: int) -> tuple[int, int] | None:
    for a in range(n):
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                return (a, b)
    return None


def _first_nonassociative(table: Table, n: int) -> tuple[int, int, int] | None:
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rb = table[b]
            for c in range(n):
                if table[ab][c] != ra[rb[c]]:
                    return (a, b, c)
    return None


def _first_bad_identity(table: Table, n: int, e: int) -> tuple[int] | None:
    for x in range(n):
        if table[e][x] != x or table[x][e] != x:
            return (x,)
    return None


def semiring_violations(data: Mapping, *, require_commutative: bool = True) -> list[AxiomViolation]:
    """Scan all semiring axioms on raw table data; return every violation found.

    Shape problems (wrong table dimensions, out-of-range zero/one, size < 2)
    raise SizeMismatch because the axiom scan cannot run on malformed tables.
    """
    n = data.get("size")
    if not isinstance(n, int) or n < 2:
        raise SizeMismatch("size must be an integer >= 2 (the identities 0 and 1 must differ)")
    zero, one = data.get("zero"), data.get("one")
    for label, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise SizeMismatch(f"{label} must be an index in 0..{n - 1}")
    add = _parse_table(data.get("add"), n, n, "add")
    mul = _parse_table(data.get("mul"), n, n, "mul")

    violations = _entry_violations(add, n, "add_entry_range")
    violations += _entry_violations(mul, n, "mul_entry_range")
    if violations:
        return violations

    if zero == one:
        violations.append(AxiomViolation("zero_one_distinct", (zero,)))

    w = _first_bad_identity(add, n, zero)
    if w:
        violations.append(AxiomViolation("add_identity", w))
    w = _first_noncommutative(add, n)
    if w:
        violations.append(AxiomViolation("add_commutativity", w))
    w = _first_nonassociative(add, n)
    if w:
        violations.append(AxiomViolation("add_associativity", w))

    w = _first_bad_identity(mul, n, one)
    if w:
        violations.append(AxiomViolation("mul_identity", w))
    if require_commutative:
        w = _first_noncommutative(mul, n)
        if w:
            violations.append(AxiomViolation("mul_commutativity", w))
    w = _first_nonassociative(mul, n)
    if w:
        violations.append(AxiomViolation("mul_associativity", w))

    for a in range(n):
        if mul[a][zero] != zero or mul[zero][a] != zero:
            violations.append(AxiomViolation("zero_annihilation", (a,)))
            break

    done = False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    violations.append(AxiomViolation("left_distributivity", (a, b, c)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    done = False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
                    violations.append(AxiomViolation("right_distributivity", (a, b, c)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return violations


def validate_semiring(data: Mapping, *, require_commutative: bool = True) -> FiniteSemiring:
    """Build a FiniteSemiring from raw table data, or raise InvalidStructure."""
    name = str(data.get("name", ""))
    violations = semiring_violations(data, require_commutative=require_commutative)
    if violations:
        raise InvalidStructure("semiring", name, violations)
    return FiniteSemiring(
        size=data["size"],
        add_table=_parse_table(data["add"], data["size"], data["size"], "add"),
        mul_table=_parse_table(data["mul"], data["size"], data["size"], "mul"),
        zero=data["zero"],
        one=data["one"],
        name=name,
    )


def semimodule_violations(base: FiniteSemiring, data: Mapping) -> list[AxiomViolation]:
    """Scan all semimodule axioms of ``data`` over ``base``; return every violation."""
    m = data.get("size")
    if not isinstance(m, int) or m < 1:
        raise SizeMismatch("size must be an integer >= 1")
    zero = data.get("zero")
    if not isinstance(zero, int) or not 0 <= zero < m:
        raise SizeMismatch(f"zero must be an index in 0..{m - 1}")
    if "base" in data and data["base"] is not None:
        embedded = data["base"]
        if isinstance(embedded, Mapping):
            declared = validate_semiring(embedded)
            if not same_semiring(declared, base):
                raise BaseMismatch("embedded base semiring differs from the supplied one")
        elif not isinstance(embedded, str):
            # string bases are references (builtin name or path) the caller resolves
            raise BaseMismatch("base must be an embedded semiring object or a reference string")
    n = base.size
    add = _parse_table(data.get("add"), m, m, "add")
    action = _parse_table(data.get("action"), n, m, "action")

    violations = _entry_violations(add, m, "add_entry_range")
    violations += _entry_violations(action, m, "action_entry_range")
    if violations:
        return violations

    w = _first_bad_identity(add, m, zero)
    if w:
        violations.append(AxiomViolation("add_identity", w))
    w = _first_noncommutative(add, m)
    if w:
        violations.append(AxiomViolation("add_commutativity", w))
    w = _first_nonassociative(add, m)
    if w:
        violations.append(AxiomViolation("add_associativity", w))

    for x in range(m):
        if action[base.one][x] != x:
            violations.append(AxiomViolation("action_identity", (x,)))
            break
    for x in range(m):
        if action[base.zero][x] != zero:
            violations.append(AxiomViolation("action_zero_scalar", (x,)))
            break
    for s in range(n):
        if action[s][zero] != zero:
            violations.append(AxiomViolation("action_zero_module", (s,)))
            break

    def scan(ranges, holds):
        for witness in _triples(*ranges):
            if not holds(*witness):
                return witness
        return None

    w = scan((n, m, m), lambda s, x, y: action[s][add[x][y]] == add[action[s][x]][action[s][y]])
    if w:
        violations.append(AxiomViolation("action_add_module", w))
    w = scan((n, n, m), lambda s, t, x: action[base.add(s, t)][x] == add[action[s][x]][action[t][x]])
    if w:
        violations.append(AxiomViolation("action_add_scalar", w))
    w = scan((n, n, m), lambda s, t, x: action[base.mul(s, t)][x] == action[s][action[t][x]])
    if w:
        violations.append(AxiomViolation("action_mul_scalar", w))
    return violations


def validate_semimodule(base: FiniteSemiring, data: Mapping) -> FiniteSemimodule:
    """Build a FiniteSemimodule over ``base``, or raise InvalidStructure."""
    name = str(data.get("name", ""))
    violations = semimodule_violations(base, data)
    if violations:
        raise InvalidStructure("semimodule", name, violations)
    m = data["size"]
    return FiniteSemimodule(
        base=base,
        size=m,
        add_table=_parse_table(data["add"], m, m, "add"),
        action_table=_parse_table(data["action"], base.size, m, "action"),
        zero=data["zero"],
        name=name,
    )


def v_set(structure: Carrier) -> Subset:
    """Elements having an additive inverse: ``{x : exists y, x + y = zero}``."""
    n = structure.size
    zero = structure.zero
    add = structure.add_table
    members = frozenset(x for x in range(n) if any(add[x][y] == zero for y in range(n)))
    return Subset(structure, members)


def is_commutative_mul(semiring: FiniteSemiring) -> bool:
    """True iff the multiplication table is symmetric."""
    return _first_noncommutative(semiring.mul_table, semiring.size) is None


def semiring_as_module(semiring: FiniteSemiring, name: str | None = None) -> FiniteSemimodule:
    """View a semiring as a semimodule over itself (the action is multiplication)."""
    return FiniteSemimodule(
        base=semiring,
        size=semiring.size,
        add_table=semiring.add_table,
        action_table=semiring.mul_table,
        zero=semiring.zero,
        name=semiring.name if name is None else name,
    )


def semiring_to_dict(s: FiniteSemiring) -> dict:
    return {
        "name": s.name,
        "size": s.size,
        "zero": s.zero,
        "one": s.one,
        "add": [list(row) for row in s.add_table],
        "mul": [list(row) for row in s.mul_table],
    }


def semimodule_to_dict(m: FiniteSemimodule, *, include_base: bool = True) -> dict:
    out = {
        "name": m.name,
        "size": m.size,
        "zero": m.zero,
        "add": [list(row) for row in m.add_table],
        "action": [list(row) for row in m.action_table],
    }
    if include_base:
        out["base"] = semiring_to_dict(m.base)
    return out
