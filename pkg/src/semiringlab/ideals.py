"""Ideals and subsemimodules of finite table structures, decided by brute force.

An ideal is a nonempty subset closed under addition that absorbs
multiplication by arbitrary elements; a subsemimodule is closed under
addition and under the scalar action.  Every predicate here is an
exhaustive scan; element powers are chased at most ``size`` steps, which
suffices on a finite carrier because the power sequence cycles by then.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .construct import ExpectationInstance
from .tables import (
    BaseMismatch,
    FiniteSemimodule,
    FiniteSemiring,
    same_semimodule,
    same_semiring,
)

SUBSET_SCAN_LIMIT = 12
DEFAULT_MAX_CARRIER = 64


class CarrierTooLarge(ValueError):
    """Enumeration refused: the carrier exceeds the configured bound."""


class NotProper(ValueError):
    """A predicate defined only for proper ideals/subsemimodules got the whole carrier."""


class NotAnIdeal(ValueError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class NotASubmodule(ValueError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


def ideal_violation(semiring: FiniteSemiring, members: frozenset[int]) -> tuple[str, tuple[int, ...]] | None:
    """None if ``members`` is an ideal, else (reason, witness)."""
    if not members:
        return ("empty", ())
    for a in members:
        for b in members:
            if semiring.add(a, b) not in members:
                return ("add", (a, b))
    for s in semiring.elements():
        for a in members:
            if semiring.mul(s, a) not in members:
                return ("absorb", (s, a))
    return None


def submodule_violation(module: FiniteSemimodule, members: frozenset[int]) -> tuple[str, tuple[int, ...]] | None:
    if not members:
        return ("empty", ())
    for x in members:
        for y in members:
            if module.add(x, y) not in members:
                return ("add", (x, y))
    for s in module.base.elements():
        for x in members:
            if module.act(s, x) not in members:
                return ("act", (s, x))
    return None


@dataclass(frozen=True)
class Ideal:
    parent: FiniteSemiring
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = ideal_violation(self.parent, self.members)
        if bad is not None:
            raise NotAnIdeal(f"not an ideal: fails {bad[0]} closure at {bad[1]}", bad[1])

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def is_proper(self) -> bool:
        return len(self.members) < self.parent.size


@dataclass(frozen=True)
class Subsemimodule:
    parent: FiniteSemimodule
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = submodule_violation(self.parent, self.members)
        if bad is not None:
            raise NotASubmodule(f"not a subsemimodule: fails {bad[0]} closure at {bad[1]}", bad[1])

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def is_proper(self) -> bool:
        return len(self.members) < self.parent.size


def ideal_closure(semiring: FiniteSemiring, gens: Iterable[int]) -> Ideal:
    """Least ideal containing ``gens``: alternate add-closure and absorb-closure."""
    members = set(gens)
    members.add(semiring.zero)
    changed = True
    while changed:
        changed = False
        snapshot = list(members)
        for a in snapshot:
            for b in snapshot:
                s = semiring.add(a, b)
                if s not in members:
                    members.add(s)
                    changed = True
        for s in semiring.elements():
            for a in list(members):
                p = semiring.mul(s, a)
                if p not in members:
                    members.add(p)
                    changed = True
    return Ideal(semiring, frozenset(members))


def submodule_closure(module: FiniteSemimodule, gens: Iterable[int]) -> Subsemimodule:
    members = set(gens)
    members.add(module.zero)
    changed = True
    while changed:
        changed = False
        snapshot = list(members)
        for x in snapshot:
            for y in snapshot:
                s = module.add(x, y)
                if s not in members:
                    members.add(s)
                    changed = True
        for s in module.base.elements():
            for x in list(members):
                p = module.act(s, x)
                if p not in members:
                    members.add(p)
                    changed = True
    return Subsemimodule(module, frozenset(members))


def _sorted_sets(found: set[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def _enumerate_closed_sets(size, zero, violation, closure_of, principal_points, strategy):
    """Shared enumerator: exact subset scan at small size, join-generation above."""
    if strategy == "auto":
        strategy = "subsets" if size <= SUBSET_SCAN_LIMIT else "lattice"
    found: set[frozenset[int]] = set()
    if strategy == "subsets":
        others = [i for i in range(size) if i != zero]
        for r in range(len(others) + 1):
            for combo in itertools.combinations(others, r):
                members = frozenset(combo) | {zero}
                if violation(members) is None:
                    found.add(members)
    elif strategy == "lattice":
        found.add(closure_of(()))
        for a in principal_points:
            found.add(closure_of((a,)))
        worklist = list(found)
        while worklist:
            current = worklist.pop()
            for other in list(found):
                join = closure_of(tuple(current | other))
                if join not in found:
                    found.add(join)
                    worklist.append(join)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return _sorted_sets(found)


def enumerate_ideals(
    semiring: FiniteSemiring,
    *,
    strategy: str = "auto",
    max_size: int = DEFAULT_MAX_CARRIER,
) -> list[Ideal]:
    """All ideals, deduplicated and sorted by size then members.

    Below the subset-scan limit every subset containing zero is tested
    directly; above it, ideals are generated as joins of principal ideals
    (every ideal is the join of the principal ideals of its elements).
    """
    if semiring.size > max_size:
        raise CarrierTooLarge(f"carrier size {semiring.size} exceeds bound {max_size}")
    sets = _enumerate_closed_sets(
        semiring.size,
        semiring.zero,
        lambda members: ideal_violation(semiring, members),
        lambda gens: ideal_closure(semiring, gens).members,
        semiring.elements(),
        strategy,
    )
    return [Ideal(semiring, s) for s in sets]


def enumerate_subsemimodules(
    module: FiniteSemimodule,
    *,
    strategy: str = "auto",
    max_size: int = DEFAULT_MAX_CARRIER,
) -> list[Subsemimodule]:
    if module.size > max_size:
        raise CarrierTooLarge(f"carrier size {module.size} exceeds bound {max_size}")
    sets = _enumerate_closed_sets(
        module.size,
        module.zero,
        lambda members: submodule_violation(module, members),
        lambda gens: submodule_closure(module, gens).members,
        module.elements(),
        strategy,
    )
    return [Subsemimodule(module, s) for s in sets]


def is_subtractive(subset: Ideal | Subsemimodule) -> bool:
    """True iff x in N and x + y in N force y in N."""
    parent = subset.parent
    members = subset.members
    for x in members:
        for y in parent.elements():
            if parent.add(x, y) in members and y not in members:
                return False
    return True


def _require_proper(subset: Ideal | Subsemimodule) -> None:
    if not subset.is_proper():
        raise NotProper("predicate is defined only for proper subsets of the carrier")


def is_prime(ideal: Ideal) -> bool:
    """ab in I forces a in I or b in I (proper ideals only)."""
    _require_proper(ideal)
    semiring = ideal.parent
    members = ideal.members
    for a in semiring.elements():
        if a in members:
            continue
        for b in semiring.elements():
            if b not in members and semiring.mul(a, b) in members:
                return False
    return True


def is_maximal(ideal: Ideal, all_ideals: Sequence[Ideal] | None = None) -> bool:
    """No proper ideal strictly contains the given proper ideal."""
    _require_proper(ideal)
    if all_ideals is None:
        all_ideals = enumerate_ideals(ideal.parent)
    for other in all_ideals:
        if other.is_proper() and ideal.members < other.members:
            return False
    return True


def is_primary(ideal: Ideal) -> bool:
    """ab in I with a not in I forces some power of b into I (proper ideals only)."""
    _require_proper(ideal)
    semiring = ideal.parent
    members = ideal.members
    for a in semiring.elements():
        if a in members:
            continue
        for b in semiring.elements():
            if semiring.mul(a, b) not in members:
                continue
            power = b
            for _ in range(semiring.size):
                if power in members:
                    break
                power = semiring.mul(power, b)
            else:
                return False
    return True


def radical(ideal: Ideal) -> Ideal:
    """Elements with some power in the ideal (powers chased up to the carrier size)."""
    semiring = ideal.parent
    members = set()
    for s in semiring.elements():
        power = s
        for _ in range(semiring.size):
            if power in ideal.members:
                members.add(s)
                break
            power = semiring.mul(power, s)
    return Ideal(semiring, frozenset(members))


def residual(submodule: Subsemimodule) -> Ideal:
    """Scalars carrying the whole module into the subsemimodule; always an ideal."""
    module = submodule.parent
    members = frozenset(
        s
        for s in module.base.elements()
        if all(module.act(s, x) in submodule.members for x in module.elements())
    )
    return Ideal(module.base, members)


def submodule_radical(submodule: Subsemimodule) -> Ideal:
    """Radical of the residual of the subsemimodule."""
    return radical(residual(submodule))


def is_primary_submodule(submodule: Subsemimodule) -> bool:
    """sx in N with x not in N forces some power of s to carry the module into N."""
    _require_proper(submodule)
    module = submodule.parent
    semiring = module.base
    carriers = residual(submodule).members
    for s in semiring.elements():
        for x in module.elements():
            if x in submodule.members or module.act(s, x) not in submodule.members:
                continue
            power = s
            for _ in range(semiring.size):
                if power in carriers:
                    break
                power = semiring.mul(power, s)
            else:
                return False
    return True


def is_weakly_prime(ideal: Ideal) -> bool:
    """Nonzero products landing in the ideal have a factor in it (proper ideals only)."""
    _require_proper(ideal)
    semiring = ideal.parent
    members = ideal.members
    zero = semiring.zero
    for a in semiring.elements():
        if a in members:
            continue
        for b in semiring.elements():
            if b in members:
                continue
            p = semiring.mul(a, b)
            if p != zero and p in members:
                return False
    return True


def annihilator(module: FiniteSemimodule) -> Ideal:
    """Scalars killing every module element: the residual of the zero subsemimodule."""
    return residual(Subsemimodule(module, frozenset({module.zero})))


def box_ideal(instance: ExpectationInstance, ideal: Ideal, submodule: Subsemimodule) -> Ideal:
    """The set I x N as an ideal of the product; raises NotAnIdeal unless I*M lands in N.

    On failure the witness is the action pair (a, x) with a in I and a*x
    outside N.
    """
    semiring = instance.factor_semiring
    module = instance.factor_module
    if not same_semiring(ideal.parent, semiring):
        raise BaseMismatch("ideal does not live in the scalar factor")
    if not same_semimodule(submodule.parent, module):
        raise BaseMismatch("subsemimodule does not live in the module factor")
    for a in sorted(ideal.members):
        for x in module.elements():
            if module.act(a, x) not in submodule.members:
                raise NotAnIdeal(
                    f"scalar part does not carry the module into the vector part: "
                    f"{a} * {x} lands outside",
                    (a, x),
                )
    members = frozenset(
        instance.index_of(a, x) for a in ideal.members for x in submodule.members
    )
    return Ideal(instance.product, members)


def ideal_projections(instance: ExpectationInstance, ideal: Ideal) -> tuple[Ideal, Subsemimodule]:
    """Coordinate projections of an ideal of the product.

    The scalar projection is an ideal, the module projection a
    subsemimodule (both constructors re-verify), and the input is contained
    in their box.
    """
    if not same_semiring(ideal.parent, instance.product):
        raise BaseMismatch("ideal does not live in the product")
    scalar = frozenset(instance.pair_of(k)[0] for k in ideal.members)
    vector = frozenset(instance.pair_of(k)[1] for k in ideal.members)
    return (
        Ideal(instance.factor_semiring, scalar),
        Subsemimodule(instance.factor_module, vector),
    )


def is_weak_gaussian(semiring: FiniteSemiring, all_ideals: Sequence[Ideal] | None = None) -> bool:
    """True iff every prime ideal is subtractive."""
    if all_ideals is None:
        all_ideals = enumerate_ideals(semiring)
    for ideal in all_ideals:
        if ideal.is_proper() and is_prime(ideal) and not is_subtractive(ideal):
            return False
    return True
