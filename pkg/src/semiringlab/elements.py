"""Distinguished element sets and semiring/semimodule class flags.

All sets are computed by exhaustive search; the class flags (local,
presimplifiable, clean, ...) are plain quantifier scans over the carrier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import ExpectationInstance
from .ideals import ideal_violation
from .tables import Carrier, FiniteSemimodule, FiniteSemiring, Subset, semiring_as_module, v_set


class EmptyModule(ValueError):
    """Zero-divisors of a module are undefined when the module is trivial."""


def units(semiring: FiniteSemiring) -> Subset:
    """Elements with a multiplicative inverse."""
    members = frozenset(
        a
        for a in semiring.elements()
        if any(semiring.mul(a, b) == semiring.one for b in semiring.elements())
    )
    return Subset(semiring, members)


def idempotents(semiring: FiniteSemiring) -> Subset:
    members = frozenset(a for a in semiring.elements() if semiring.mul(a, a) == a)
    return Subset(semiring, members)


def additive_idempotents(structure: Carrier) -> Subset:
    members = frozenset(x for x in structure.elements() if structure.add_table[x][x] == x)
    return Subset(structure, members)


def nilpotents(semiring: FiniteSemiring) -> Subset:
    """Elements with some power equal to zero (powers chased up to the carrier size)."""
    members = set()
    for a in semiring.elements():
        power = a
        for _ in range(semiring.size):
            if power == semiring.zero:
                members.add(a)
                break
            power = semiring.mul(power, a)
    return Subset(semiring, frozenset(members))


def zero_divisors(semiring: FiniteSemiring) -> Subset:
    """Elements killed by some nonzero element; zero itself always qualifies."""
    members = frozenset(
        a
        for a in semiring.elements()
        if any(b != semiring.zero and semiring.mul(a, b) == semiring.zero for b in semiring.elements())
    )
    return Subset(semiring, members)


def zero_divisors_mod(module: FiniteSemimodule) -> Subset:
    """Scalars killing some nonzero module element."""
    if module.size == 1:
        raise EmptyModule("zero-divisors of the trivial module are undefined")
    members = frozenset(
        s
        for s in module.base.elements()
        if any(x != module.zero and module.act(s, x) == module.zero for x in module.elements())
    )
    return Subset(module.base, members)


def is_semifield(semiring: FiniteSemiring) -> bool:
    """Every nonzero element is a unit."""
    u = units(semiring).members
    return all(a in u for a in semiring.elements() if a != semiring.zero)


def is_local(semiring: FiniteSemiring) -> bool:
    """The nonunits form an ideal (on a finite carrier: a unique maximal ideal)."""
    nonunits = frozenset(semiring.elements()) - units(semiring).members
    return ideal_violation(semiring, nonunits) is None


def is_presimplifiable(semiring: FiniteSemiring) -> bool:
    """st = t forces s a unit or t = 0."""
    return is_presimplifiable_mod(semiring_as_module(semiring))


def is_presimplifiable_mod(module: FiniteSemimodule) -> bool:
    """sm = m forces s a unit of the base or m = 0."""
    u = units(module.base).members
    for s in module.base.elements():
        if s in u:
            continue
        for x in module.elements():
            if x != module.zero and module.act(s, x) == x:
                return False
    return True


def _as_module(structure: FiniteSemiring | FiniteSemimodule) -> FiniteSemimodule:
    return semiring_as_module(structure) if isinstance(structure, FiniteSemiring) else structure


def cyclic_submodule(structure: FiniteSemiring | FiniteSemimodule, x: int) -> frozenset[int]:
    """Members of the cyclic subsemimodule generated by x: all scalar multiples."""
    module = _as_module(structure)
    return frozenset(module.act(s, x) for s in module.base.elements())


def associates(structure: FiniteSemiring | FiniteSemimodule, x: int, y: int) -> bool:
    """x and y generate the same cyclic subsemimodule."""
    return cyclic_submodule(structure, x) == cyclic_submodule(structure, y)


def strong_associates(
    structure: FiniteSemiring | FiniteSemimodule,
    x: int,
    y: int,
    units_set: frozenset[int] | None = None,
) -> bool:
    """x = u*y for some unit u of the base."""
    module = _as_module(structure)
    if units_set is None:
        units_set = units(module.base).members
    return any(module.act(u, y) == x for u in units_set)


def is_strongly_associate(
    structure: FiniteSemiring | FiniteSemimodule, units_set: frozenset[int] | None = None
) -> bool:
    """Associate elements are strong associates (semirings via the self-module view)."""
    module = _as_module(structure)
    if units_set is None:
        units_set = units(module.base).members
    cyclic = [cyclic_submodule(module, x) for x in module.elements()]
    for x in module.elements():
        for y in range(x + 1, module.size):
            if cyclic[x] == cyclic[y] and not strong_associates(module, x, y, units_set):
                return False
    return True


def is_domainlike(semiring: FiniteSemiring) -> bool:
    """All zero-divisors are nilpotent."""
    return zero_divisors(semiring).members <= nilpotents(semiring).members


def is_domainlike_mod(module: FiniteSemimodule) -> bool:
    """All module zero-divisors are nilpotent in the base."""
    return zero_divisors_mod(module).members <= nilpotents(module.base).members


def is_clean(semiring: FiniteSemiring) -> bool:
    """Every element is a unit plus an idempotent."""
    u = units(semiring).members
    e_set = idempotents(semiring).members
    sums = {semiring.add(u_, e_) for u_ in u for e_ in e_set}
    return all(a in sums for a in semiring.elements())


def is_almost_clean(semiring: FiniteSemiring) -> bool:
    """Every element is a non-zero-divisor plus an idempotent."""
    regular = frozenset(semiring.elements()) - zero_divisors(semiring).members
    e_set = idempotents(semiring).members
    sums = {semiring.add(t, e_) for t in regular for e_ in e_set}
    return all(a in sums for a in semiring.elements())


def almost_clean_by_parts(semiring: FiniteSemiring, module: FiniteSemimodule) -> bool:
    """Every scalar is t + e with e idempotent and t outside both zero-divisor sets.

    For the trivial module the module zero-divisor set is taken to be empty.
    """
    bad = zero_divisors(semiring).members
    if module.size > 1:
        bad = bad | zero_divisors_mod(module).members
    good = frozenset(semiring.elements()) - bad
    e_set = idempotents(semiring).members
    sums = {semiring.add(t, e_) for t in good for e_ in e_set}
    return all(a in sums for a in semiring.elements())


def is_weakly_clean(semiring: FiniteSemiring, *, literal: bool = False) -> bool:
    """Weakened clean condition.

    Decided reading (default): every s is u + e, or s + e is a unit, for
    some unit u and idempotent e.  Literal reading: every s is u + e, or
    there exist a unit u and idempotent e with u + e = u (a condition not
    mentioning s at all); both are exposed so the difference stays visible.
    """
    u_set = units(semiring).members
    e_set = idempotents(semiring).members
    sums = {semiring.add(u_, e_) for u_ in u_set for e_ in e_set}
    if literal:
        absorbed = any(semiring.add(u_, e_) == u_ for u_ in u_set for e_ in e_set)
        return all(a in sums or absorbed for a in semiring.elements())
    for a in semiring.elements():
        if a in sums:
            continue
        if not any(semiring.add(a, e_) in u_set for e_ in e_set):
            return False
    return True


def additively_regular_elements(structure: Carrier) -> Subset:
    """Elements a with a + a + b = a for some b."""
    add = structure.add_table
    members = frozenset(
        a
        for a in structure.elements()
        if any(add[add[a][a]][b] == a for b in structure.elements())
    )
    return Subset(structure, members)


def is_additively_regular(structure: Carrier) -> bool:
    return len(additively_regular_elements(structure)) == structure.size


@dataclass
class ClassReport:
    """Distinguished element sets of a semiring plus its class flags."""

    name: str
    size: int
    units: Subset
    v_set: Subset
    idempotents: Subset
    nilpotents: Subset
    zero_divisors: Subset
    flags: dict[str, bool]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "units": list(self.units.indices()),
            "v_set": list(self.v_set.indices()),
            "idempotents": list(self.idempotents.indices()),
            "nilpotents": list(self.nilpotents.indices()),
            "zero_divisors": list(self.zero_divisors.indices()),
            "flags": dict(self.flags),
        }


def classify(target: FiniteSemiring | ExpectationInstance) -> ClassReport:
    """Full element census and class flags for a semiring (or a built product)."""
    semiring = target.product if isinstance(target, ExpectationInstance) else target
    u = units(semiring)
    z = zero_divisors(semiring)
    nil = nilpotents(semiring)
    if u.members & z.members:
        raise RuntimeError("unit/zero-divisor overlap: corrupt tables")
    if semiring.size > 1 and not nil.members <= z.members:
        raise RuntimeError("nilpotent outside the zero-divisors: corrupt tables")
    flags = {
        "local": is_local(semiring),
        "presimplifiable": is_presimplifiable(semiring),
        "strongly_associate": is_strongly_associate(semiring, u.members),
        "domainlike": is_domainlike(semiring),
        "clean": is_clean(semiring),
        "almost_clean": is_almost_clean(semiring),
        "weakly_clean": is_weakly_clean(semiring),
        "weakly_clean_literal": is_weakly_clean(semiring, literal=True),
        "additively_regular": is_additively_regular(semiring),
    }
    return ClassReport(
        name=semiring.name,
        size=semiring.size,
        units=u,
        v_set=v_set(semiring),
        idempotents=idempotents(semiring),
        nilpotents=nil,
        zero_divisors=z,
        flags=flags,
    )
