"""Brute-force verification of the structural facts about product semirings.

Every check runs on one (semiring, module) cell of a verification grid and
decides a quantified statement by exhaustive scan, reporting pass / fail /
not-applicable plus a witness in factor-pair coordinates on failure.  The
check identifiers are stable report keys; each carries a one-line statement
of what is being decided.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from dataclasses import dataclass, field
from functools import cached_property

from . import catalog
from .construct import (
    ExpectationInstance,
    build_expectation,
    embed_s,
    graded_decomposition,
    matrix_iso_check,
    zero_m_ideal_nilpotency,
    zero_scalar_slice,
)
from .elements import (
    additive_idempotents,
    additively_regular_elements,
    almost_clean_by_parts,
    is_additively_regular,
    is_almost_clean,
    is_clean,
    is_domainlike,
    is_local,
    is_presimplifiable,
    is_presimplifiable_mod,
    is_semifield,
    is_strongly_associate,
    is_weakly_clean,
    nilpotents,
    units,
    zero_divisors,
    zero_divisors_mod,
)
from .ideals import (
    Ideal,
    NotAnIdeal,
    NotASubmodule,
    Subsemimodule,
    annihilator,
    box_ideal,
    enumerate_ideals,
    enumerate_subsemimodules,
    ideal_projections,
    ideal_violation,
    is_maximal,
    is_primary,
    is_primary_submodule,
    is_prime,
    is_subtractive,
    is_weak_gaussian,
    is_weakly_prime,
    radical,
    submodule_radical,
)
from .numeric import oracle_disagreements, weight_law_failures
from .tables import (
    FiniteSemimodule,
    FiniteSemiring,
    semimodule_to_dict,
    semiring_to_dict,
    semiring_violations,
    v_set,
    validate_semimodule,
    validate_semiring,
)

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass
class CheckRecord:
    theorem: str
    instance: str
    status: str
    witness: object = None
    runtime: float = 0.0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "status": self.status,
            "witness": self.witness,
            "runtime": round(self.runtime, 6),
        }


@dataclass
class PairContext:
    """One grid cell: the factors, the built product, and cached derived data."""

    label: str
    semiring: FiniteSemiring
    module: FiniteSemimodule
    census: list[str] = field(default_factory=list)

    @cached_property
    def instance(self) -> ExpectationInstance:
        return build_expectation(self.semiring, self.module)

    @cached_property
    def product(self) -> FiniteSemiring:
        return self.instance.product

    def pair(self, k: int) -> list[int]:
        return list(self.instance.pair_of(k))

    def pairs_of(self, members) -> list[list[int]]:
        return [self.pair(k) for k in sorted(members)]

    @cached_property
    def t1_set(self) -> frozenset[int]:
        return zero_scalar_slice(self.instance)

    @cached_property
    def ideals_s(self) -> list[Ideal]:
        return enumerate_ideals(self.semiring)

    @cached_property
    def submods_m(self) -> list[Subsemimodule]:
        return enumerate_subsemimodules(self.module)

    @cached_property
    def ideals_e(self) -> list[Ideal]:
        return enumerate_ideals(self.product)

    @cached_property
    def primes_s(self) -> list[Ideal]:
        return [i for i in self.ideals_s if i.is_proper() and is_prime(i)]

    @cached_property
    def primes_e(self) -> list[Ideal]:
        return [i for i in self.ideals_e if i.is_proper() and is_prime(i)]

    @cached_property
    def full_module(self) -> Subsemimodule:
        return Subsemimodule(self.module, frozenset(self.module.elements()))

    @cached_property
    def boxables(self) -> list[tuple[Ideal, Subsemimodule, Ideal]]:
        """(I, N, I box N) for every pair where the box is a legal ideal."""
        out = []
        for i in self.ideals_s:
            for n in self.submods_m:
                if self._scalar_maps_into(i.members, n.members):
                    out.append((i, n, box_ideal(self.instance, i, n)))
        return out

    def _scalar_maps_into(self, scalar_members, module_members) -> bool:
        return all(
            self.module.act(a, x) in module_members
            for a in scalar_members
            for x in self.module.elements()
        )

    def box_members(self, scalar_members, module_members) -> frozenset[int]:
        return frozenset(
            self.instance.index_of(a, x) for a in scalar_members for x in module_members
        )

    @cached_property
    def units_s(self) -> frozenset[int]:
        return units(self.semiring).members

    @cached_property
    def vset_m(self) -> frozenset[int]:
        return v_set(self.module).members

    @cached_property
    def vset_full(self) -> bool:
        return len(self.vset_m) == self.module.size

    @cached_property
    def units_e_formula(self) -> frozenset[int]:
        return self.box_members(self.units_s, self.vset_m)

    @cached_property
    def z_s(self) -> frozenset[int]:
        return zero_divisors(self.semiring).members

    @cached_property
    def z_m(self) -> frozenset[int]:
        if self.module.size == 1:
            return frozenset()
        return zero_divisors_mod(self.module).members

    @cached_property
    def nil_s(self) -> frozenset[int]:
        return nilpotents(self.semiring).members

    @cached_property
    def units_e(self) -> frozenset[int]:
        return units(self.product).members

    @cached_property
    def z_e(self) -> frozenset[int]:
        return zero_divisors(self.product).members

    @cached_property
    def nil_e(self) -> frozenset[int]:
        return nilpotents(self.product).members


def _is_graded(ctx: PairContext, members: frozenset[int]) -> bool:
    """Every member splits into a scalar-slice part and a zero-scalar part inside the set."""
    module_zero = ctx.module.zero
    scalar_zero = ctx.semiring.zero
    for k in members:
        s, x = ctx.instance.pair_of(k)
        if ctx.instance.index_of(s, module_zero) not in members:
            return False
        if ctx.instance.index_of(scalar_zero, x) not in members:
            return False
    return True


def check_product_is_semiring(ctx: PairContext):
    violations = semiring_violations(semiring_to_dict(ctx.product))
    if violations:
        return FAIL, [str(v) for v in violations]
    return PASS, None


def check_embedding(ctx: PairContext):
    s_ring = ctx.semiring
    e_ring = ctx.product
    emb = {s: embed_s(ctx.instance, s) for s in s_ring.elements()}
    if emb[s_ring.zero] != e_ring.zero or emb[s_ring.one] != e_ring.one:
        return FAIL, {"reason": "identities not preserved"}
    image = set(emb.values())
    if len(image) != s_ring.size:
        return FAIL, {"reason": "embedding not injective"}
    for s in s_ring.elements():
        for t in s_ring.elements():
            if e_ring.add(emb[s], emb[t]) != emb[s_ring.add(s, t)]:
                return FAIL, {"law": "add", "s": s, "t": t}
            if e_ring.mul(emb[s], emb[t]) != emb[s_ring.mul(s, t)]:
                return FAIL, {"law": "mul", "s": s, "t": t}
    for a in image:
        for b in image:
            if e_ring.add(a, b) not in image or e_ring.mul(a, b) not in image:
                return FAIL, {"reason": "image not closed", "a": ctx.pair(a), "b": ctx.pair(b)}
    return PASS, None


def check_slice_nilpotency(ctx: PairContext):
    got = zero_m_ideal_nilpotency(ctx.instance)
    expected = 1 if ctx.module.size == 1 else 2
    if got != expected:
        return FAIL, {"expected": expected, "got": got}
    return PASS, None


def check_matrix_presentation(ctx: PairContext):
    return (PASS, None) if matrix_iso_check(ctx.instance) else (FAIL, {"reason": "records disagree"})


def check_grading(ctx: PairContext):
    try:
        dec = graded_decomposition(ctx.instance)
    except RuntimeError as exc:
        return FAIL, {"reason": str(exc)}
    if len(dec.t0) != ctx.semiring.size or len(dec.t1) != ctx.module.size:
        return FAIL, {"reason": "slice sizes wrong"}
    if dec.t0.members & dec.t1.members != {ctx.product.zero}:
        return FAIL, {"reason": "slices overlap beyond zero"}
    return PASS, None


def check_box_ideal_iff(ctx: PairContext):
    e_ring = ctx.product
    t0 = frozenset(ctx.instance.index_of(s, ctx.module.zero) for s in ctx.semiring.elements())
    t1 = ctx.t1_set
    for i in ctx.ideals_s:
        for n in ctx.submods_m:
            legal = ctx._scalar_maps_into(i.members, n.members)
            members = ctx.box_members(i.members, n.members)
            actually_ideal = ideal_violation(e_ring, members) is None
            if legal != actually_ideal:
                return FAIL, {"ideal": sorted(i.members), "submodule": sorted(n.members)}
            if not legal:
                continue
            if not _is_graded(ctx, members):
                return FAIL, {"reason": "box not graded", "ideal": sorted(i.members)}
            j0 = members & t0
            j1 = members & t1
            degree_targets = [(t0, j0, j0), (t0, j1, j1), (t1, j0, j1), (t1, j1, {e_ring.zero})]
            for left, right, target in degree_targets:
                for a in left:
                    for b in right:
                        if e_ring.mul(a, b) not in target:
                            return FAIL, {
                                "reason": "degree overflow",
                                "a": ctx.pair(a),
                                "b": ctx.pair(b),
                            }
    for j in ctx.ideals_e:
        if not _is_graded(ctx, j.members):
            continue
        scalar = frozenset(
            s for s in ctx.semiring.elements()
            if ctx.instance.index_of(s, ctx.module.zero) in j.members
        )
        vector = frozenset(
            x for x in ctx.module.elements()
            if ctx.instance.index_of(ctx.semiring.zero, x) in j.members
        )
        if ctx.box_members(scalar, vector) != j.members:
            return FAIL, {"reason": "graded ideal is not a box", "ideal": ctx.pairs_of(j.members)}
    return PASS, None


def check_box_radical(ctx: PairContext):
    for i, _n, box in ctx.boxables:
        expected = ctx.box_members(radical(i).members, frozenset(ctx.module.elements()))
        got = radical(box).members
        if got != expected:
            return FAIL, {
                "ideal": sorted(i.members),
                "submodule": sorted(_n.members),
                "radical": ctx.pairs_of(got),
            }
    return PASS, None


def check_projections(ctx: PairContext):
    for j in ctx.ideals_e:
        try:
            i, n = ideal_projections(ctx.instance, j)
        except (NotAnIdeal, NotASubmodule) as exc:
            return FAIL, {"reason": str(exc), "ideal": ctx.pairs_of(j.members)}
        if not ctx._scalar_maps_into(i.members, n.members):
            return FAIL, {"reason": "projection violates containment", "ideal": ctx.pairs_of(j.members)}
        if not j.members <= ctx.box_members(i.members, n.members):
            return FAIL, {"reason": "ideal escapes its projection box"}
    return PASS, None


def check_subtractive_over_slice(ctx: PairContext):
    for j in ctx.ideals_e:
        if not (is_subtractive(j) and ctx.t1_set <= j.members):
            continue
        scalar = frozenset(ctx.instance.pair_of(k)[0] for k in j.members)
        if ctx.box_members(scalar, frozenset(ctx.module.elements())) != j.members:
            return FAIL, {"ideal": ctx.pairs_of(j.members)}
    return PASS, None


def check_primes_contain_slice(ctx: PairContext):
    for p in ctx.primes_e:
        if not ctx.t1_set <= p.members:
            return FAIL, {"prime": ctx.pairs_of(p.members)}
    return PASS, None


def check_subtractive_primes_are_boxes(ctx: PairContext):
    for p in ctx.primes_e:
        if not is_subtractive(p):
            continue
        scalar = frozenset(ctx.instance.pair_of(k)[0] for k in p.members)
        if ctx.box_members(scalar, frozenset(ctx.module.elements())) != p.members:
            return FAIL, {"prime": ctx.pairs_of(p.members)}
        base = Ideal(ctx.semiring, scalar)
        if not (base.is_proper() and is_prime(base) and is_subtractive(base)):
            return FAIL, {"scalar_part": sorted(scalar)}
    return PASS, None


def check_subtractive_transfer(ctx: PairContext):
    boxes_subtractive = all(is_subtractive(box) for _i, _n, box in ctx.boxables)
    factors_subtractive = all(is_subtractive(i) for i in ctx.ideals_s) and all(
        is_subtractive(n) for n in ctx.submods_m
    )
    if boxes_subtractive != factors_subtractive:
        return FAIL, {"boxes": boxes_subtractive, "factors": factors_subtractive}
    if all(is_subtractive(j) for j in ctx.ideals_e) and not factors_subtractive:
        return FAIL, {"reason": "subtractive product with non-subtractive factor"}
    return PASS, None


def check_weak_gaussian_shapes(ctx: PairContext):
    if not is_weak_gaussian(ctx.product, ctx.ideals_e):
        return NA, None
    full = frozenset(ctx.module.elements())
    for p in ctx.primes_e:
        scalar = frozenset(ctx.instance.pair_of(k)[0] for k in p.members)
        if ctx.box_members(scalar, full) != p.members:
            return FAIL, {"prime": ctx.pairs_of(p.members)}
        base = Ideal(ctx.semiring, scalar)
        if not (is_prime(base) and is_subtractive(base)):
            return FAIL, {"scalar_part": sorted(scalar)}
    maximals = [j for j in ctx.ideals_e if j.is_proper() and is_maximal(j, ctx.ideals_e)]
    for j in maximals:
        scalar = frozenset(ctx.instance.pair_of(k)[0] for k in j.members)
        if ctx.box_members(scalar, full) != j.members:
            return FAIL, {"maximal": ctx.pairs_of(j.members)}
        base = Ideal(ctx.semiring, scalar)
        if not (is_maximal(base, ctx.ideals_s) and is_subtractive(base)):
            return FAIL, {"scalar_part": sorted(scalar)}
    return PASS, None


def check_weakly_prime_lift(ctx: PairContext):
    s_ring = ctx.semiring
    ann = annihilator(ctx.module).members
    condition = all(
        a in ann and b in ann
        for a in s_ring.elements()
        for b in s_ring.elements()
        if s_ring.mul(a, b) == s_ring.zero and a != s_ring.zero and b != s_ring.zero
    )
    if not condition:
        return PASS, None
    for i in ctx.ideals_s:
        if not i.is_proper() or not is_weakly_prime(i):
            continue
        box = box_ideal(ctx.instance, i, ctx.full_module)
        if not is_weakly_prime(box):
            return FAIL, {"ideal": sorted(i.members)}
    return PASS, None


def check_residual_and_primary_radical(ctx: PairContext):
    for n in ctx.submods_m:
        try:
            residual_ideal = submodule_radical(n)
        except NotAnIdeal as exc:
            return FAIL, {"submodule": sorted(n.members), "reason": str(exc)}
        if n.is_proper() and is_primary_submodule(n):
            if not (residual_ideal.is_proper() and is_prime(residual_ideal)):
                return FAIL, {"submodule": sorted(n.members), "radical": sorted(residual_ideal.members)}
    return PASS, None


def check_primary_box_iff(ctx: PairContext):
    for i in ctx.ideals_s:
        if not i.is_proper():
            continue
        box = box_ideal(ctx.instance, i, ctx.full_module)
        if is_primary(i) != is_primary(box):
            return FAIL, {"ideal": sorted(i.members)}
    return PASS, None


def check_primary_box_consequences(ctx: PairContext):
    for i, n, box in ctx.boxables:
        if not n.is_proper() or not is_primary(box):
            continue
        if not is_primary_submodule(n):
            return FAIL, {"submodule": sorted(n.members)}
        if radical(i).members != submodule_radical(n).members:
            return FAIL, {"ideal": sorted(i.members), "submodule": sorted(n.members)}
    return PASS, None


def check_primary_box_with_subtractive_module(ctx: PairContext):
    if not all(is_subtractive(n) for n in ctx.submods_m):
        return NA, None
    for i, n, box in ctx.boxables:
        if not n.is_proper():
            continue
        expected = is_primary_submodule(n) and radical(i).members == submodule_radical(n).members
        if is_primary(box) != expected:
            return FAIL, {"ideal": sorted(i.members), "submodule": sorted(n.members)}
    return PASS, None


def check_module_zero_divisors_prime_cover(ctx: PairContext):
    if ctx.module.size == 1:
        return NA, None
    covering = [p for p in ctx.primes_s if p.members <= ctx.z_m]
    for z in ctx.z_m:
        if not any(z in p.members for p in covering):
            return FAIL, {"zero_divisor": z}
    return PASS, None


def check_units_formula(ctx: PairContext):
    if ctx.units_e != ctx.units_e_formula:
        return FAIL, {"units": ctx.pairs_of(ctx.units_e)}
    return PASS, None


def check_idempotents_formula(ctx: PairContext):
    s_ring, module = ctx.semiring, ctx.module
    expected = frozenset(
        k
        for k in ctx.product.elements()
        for (s, x) in [ctx.instance.pair_of(k)]
        if s_ring.mul(s, s) == s and module.add(module.act(s, x), module.act(s, x)) == x
    )
    got = frozenset(k for k in ctx.product.elements() if ctx.product.mul(k, k) == k)
    if got != expected:
        return FAIL, {"idempotents": ctx.pairs_of(got)}
    if additive_idempotents(module).members == {module.zero}:
        for k in got:
            if ctx.instance.pair_of(k)[1] != module.zero:
                return FAIL, {"reason": "idempotent with nonzero vector part", "element": ctx.pair(k)}
    return PASS, None


def check_nilpotents_formula(ctx: PairContext):
    expected = ctx.box_members(ctx.nil_s, frozenset(ctx.module.elements()))
    if ctx.nil_e != expected:
        return FAIL, {"nilpotents": ctx.pairs_of(ctx.nil_e)}
    if ideal_violation(ctx.product, ctx.nil_e) is not None:
        return FAIL, {"reason": "nilpotents do not form an ideal"}
    return PASS, None


def check_zero_divisors_formula(ctx: PairContext):
    expected = ctx.box_members(ctx.z_s | ctx.z_m, frozenset(ctx.module.elements()))
    if ctx.z_e != expected:
        return FAIL, {"zero_divisors": ctx.pairs_of(ctx.z_e)}
    return PASS, None


def check_semifield_local(ctx: PairContext):
    if not is_semifield(ctx.semiring):
        return NA, None
    return (PASS, None) if is_local(ctx.product) else (FAIL, None)


def check_presimplifiable_iff(ctx: PairContext):
    lhs = is_presimplifiable(ctx.product)
    rhs = ctx.vset_full and is_presimplifiable(ctx.semiring) and is_presimplifiable_mod(ctx.module)
    return (PASS, None) if lhs == rhs else (FAIL, {"product": lhs, "factors": rhs})


def check_presimplifiable_strongly_associate(ctx: PairContext):
    cases = [
        ("scalar", is_presimplifiable(ctx.semiring), lambda: is_strongly_associate(ctx.semiring)),
        ("module", is_presimplifiable_mod(ctx.module), lambda: is_strongly_associate(ctx.module)),
        (
            "product",
            is_presimplifiable(ctx.product),
            lambda: is_strongly_associate(ctx.product, ctx.units_e_formula),
        ),
    ]
    for role, presimp, strongly in cases:
        if presimp:
            if not strongly():
                return FAIL, {"structure": role}
        elif strongly():
            ctx.census.append(f"{ctx.label}:{role}")
    return PASS, None


def check_strongly_associate_transfer(ctx: PairContext):
    sa_product = is_strongly_associate(ctx.product, ctx.units_e_formula)
    sa_scalar = is_strongly_associate(ctx.semiring)
    sa_module = is_strongly_associate(ctx.module)
    if sa_product and not (sa_scalar and sa_module):
        return FAIL, {"scalar": sa_scalar, "module": sa_module}
    if is_presimplifiable(ctx.semiring) and ctx.vset_full and sa_product != sa_module:
        return FAIL, {"product": sa_product, "module": sa_module}
    return PASS, None


def check_domainlike_iff(ctx: PairContext):
    lhs = is_domainlike(ctx.product)
    rhs = is_domainlike(ctx.semiring) and ctx.z_m <= ctx.nil_s
    return (PASS, None) if lhs == rhs else (FAIL, {"product": lhs, "factors": rhs})


def check_clean_transfer(ctx: PairContext):
    if not ctx.vset_full:
        return NA, None
    lhs, rhs = is_clean(ctx.product), is_clean(ctx.semiring)
    return (PASS, None) if lhs == rhs else (FAIL, {"product": lhs, "scalar": rhs})


def check_almost_clean_iff(ctx: PairContext):
    lhs = is_almost_clean(ctx.product)
    rhs = almost_clean_by_parts(ctx.semiring, ctx.module)
    return (PASS, None) if lhs == rhs else (FAIL, {"product": lhs, "criterion": rhs})


def check_weakly_clean_transfer(ctx: PairContext):
    if not ctx.vset_full:
        return NA, None
    lhs, rhs = is_weakly_clean(ctx.product), is_weakly_clean(ctx.semiring)
    return (PASS, None) if lhs == rhs else (FAIL, {"product": lhs, "scalar": rhs})


def check_additively_regular_componentwise(ctx: PairContext):
    ar_s = additively_regular_elements(ctx.semiring).members
    ar_m = additively_regular_elements(ctx.module).members
    expected = ctx.box_members(ar_s, ar_m)
    got = additively_regular_elements(ctx.product).members
    if got != expected:
        return FAIL, {"regular": ctx.pairs_of(got)}
    flag = is_additively_regular(ctx.product)
    if flag != (is_additively_regular(ctx.semiring) and is_additively_regular(ctx.module)):
        return FAIL, {"flag": flag}
    return PASS, None


def check_v_set_law(ctx: PairContext):
    for structure in (ctx.semiring, ctx.module, ctx.product):
        members = v_set(structure).members
        for x in structure.elements():
            for y in structure.elements():
                if (structure.add_table[x][y] in members) != (x in members and y in members):
                    return FAIL, {"x": x, "y": y, "structure": structure.name}
    return PASS, None


def check_units_not_zero_divisors(ctx: PairContext):
    if ctx.units_s & ctx.z_s:
        return FAIL, {"overlap": sorted(ctx.units_s & ctx.z_s)}
    if ctx.units_e & ctx.z_e:
        return FAIL, {"overlap": ctx.pairs_of(ctx.units_e & ctx.z_e)}
    return PASS, None


def check_nilpotents_in_primes(ctx: PairContext):
    for p in ctx.primes_s:
        if not ctx.nil_s <= p.members:
            return FAIL, {"prime": sorted(p.members)}
    for p in ctx.primes_e:
        if not ctx.nil_e <= p.members:
            return FAIL, {"prime": ctx.pairs_of(p.members)}
    return PASS, None


CHECKS = (
    ("Prop-2.1-1", "product tables pass every semiring axiom", check_product_is_semiring),
    ("Prop-2.1-2", "scalar embedding s -> (s, 0) preserves both operations", check_embedding),
    ("Prop-2.1-3", "zero-scalar slice has nilpotency index 2 (1 for the trivial module)", check_slice_nilpotency),
    ("Prop-2.1-4", "triangular-record presentation matches the product", check_matrix_presentation),
    ("Thm-2.6-1", "unique degree decomposition with degree-additive products", check_grading),
    ("Thm-2.6-2", "box sets are ideals exactly when the scalar part maps the module into the vector part; boxes are graded and graded ideals are boxes", check_box_ideal_iff),
    ("Thm-2.6-3", "radical of a box is the radical of its scalar part boxed with the whole module", check_box_radical),
    ("Thm-2.6-4", "projections of any product ideal form an ideal/submodule pair that bounds it", check_projections),
    ("Thm-2.6-5", "subtractive ideals containing the zero-scalar slice are full-module boxes", check_subtractive_over_slice),
    ("Thm-2.6-6", "every prime ideal of the product contains the zero-scalar slice", check_primes_contain_slice),
    ("Thm-2.6-7", "subtractive primes are full-module boxes of subtractive primes", check_subtractive_primes_are_boxes),
    ("Cor-2.7", "all boxes are subtractive exactly when all factor ideals and submodules are", check_subtractive_transfer),
    ("Cor-2.8", "when every product prime is subtractive, primes and maximals are full-module boxes", check_weak_gaussian_shapes),
    ("Prop-2.11-rev", "weakly prime plus the annihilator condition lifts to the full-module box", check_weakly_prime_lift),
    ("Prop-2.13", "residuals are ideals and radicals of primary submodules are prime", check_residual_and_primary_radical),
    ("Thm-2.14-1", "an ideal is primary exactly when its full-module box is primary", check_primary_box_iff),
    ("Thm-2.14-2", "a primary box forces a primary vector part with matching radicals", check_primary_box_consequences),
    ("Cor-2.15", "with a subtractive module, a box is primary exactly when its parts qualify", check_primary_box_with_subtractive_module),
    ("Prop-3.1", "module zero-divisors are covered by primes inside the zero-divisor set", check_module_zero_divisors_prime_cover),
    ("Thm-3.3-1", "units are exactly unit-scalar, invertible-vector pairs", check_units_formula),
    ("Thm-3.3-2", "idempotents match the componentwise criterion", check_idempotents_formula),
    ("Thm-3.3-3", "nilpotents are nilpotent-scalar pairs and form an ideal", check_nilpotents_formula),
    ("Thm-3.3-4", "zero-divisors are pairs whose scalar kills something", check_zero_divisors_formula),
    ("Prop-3.5", "a semifield of scalars makes the product local", check_semifield_local),
    ("Thm-3.7", "presimplifiable product iff fully invertible module and presimplifiable factors", check_presimplifiable_iff),
    ("Prop-3.9", "presimplifiable structures are strongly associate", check_presimplifiable_strongly_associate),
    ("Prop-3.10", "strong associativity descends to the factors and, under the stated hypotheses, tracks the module", check_strongly_associate_transfer),
    ("Prop-3.12", "domainlike product iff both factors are domainlike", check_domainlike_iff),
    ("Prop-3.14", "with a fully invertible module, clean product iff clean scalars", check_clean_transfer),
    ("Prop-3.16", "almost clean product iff scalar decompositions avoid both zero-divisor sets", check_almost_clean_iff),
    ("Prop-3.18", "with a fully invertible module, weakly clean product iff weakly clean scalars", check_weakly_clean_transfer),
    ("Prop-3.19", "additive regularity is componentwise", check_additively_regular_componentwise),
    ("law-v-set", "additively invertible elements are exactly closed under addition", check_v_set_law),
    ("law-units-regular", "no unit is a zero-divisor", check_units_not_zero_divisors),
    ("law-nil-in-primes", "nilpotents lie in every prime ideal", check_nilpotents_in_primes),
)

CHECK_STATEMENTS = {theorem: statement for theorem, statement, _fn in CHECKS}
CHECK_STATEMENTS["numeric-weight-laws"] = "weight arithmetic satisfies the carrier laws within tolerance"
CHECK_STATEMENTS["numeric-oracle"] = "forward totals agree with explicit path enumeration within tolerance"


@dataclass
class GridCell:
    label: str
    semiring: FiniteSemiring
    module: FiniteSemimodule


def default_grid(
    max_order: int = 3, *, include_builtins: bool = True, module_order: int = 3, max_product: int = 16
) -> list[GridCell]:
    """Enumerated pairs up to the given orders plus builtin pairs with small products."""
    cells = []
    for n in range(2, max_order + 1):
        for s_entry in catalog.enumerate_semirings(n):
            for m in range(1, module_order + 1):
                for m_entry in catalog.enumerate_semimodules(s_entry.structure, m):
                    label = f"E({s_entry.name}, {m_entry.name})"
                    cells.append(GridCell(label, s_entry.structure, m_entry.structure))
    if include_builtins:
        for name, semiring, module in catalog.builtin_pairs(max_product=max_product):
            label = f"E({name}, {module.name or 'M'})"
            cells.append(GridCell(label, semiring, module))
    return cells


def run_pair(label: str, semiring: FiniteSemiring, module: FiniteSemimodule):
    """Run every registered check on one grid cell."""
    ctx = PairContext(label=label, semiring=semiring, module=module)
    records = []
    for theorem, _statement, fn in CHECKS:
        started = time.perf_counter()
        try:
            status, witness = fn(ctx)
        except Exception as exc:  # a crashed check is a failed check
            status, witness = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
        records.append(
            CheckRecord(
                theorem=theorem,
                instance=label,
                status=status,
                witness=witness,
                runtime=time.perf_counter() - started,
            )
        )
    return records, list(ctx.census)


def _run_cell_from_dicts(args):
    label, semiring_data, module_data = args
    semiring = validate_semiring(semiring_data)
    module = validate_semimodule(semiring, module_data)
    records, census = run_pair(label, semiring, module)
    return records, census


def weakly_prime_forward_probe() -> dict:
    """Exhaustive probe of the converse lift on the modulus-4 self-module.

    Scans whether the full-module box over the even ideal is weakly prime
    even though the annihilator condition fails; a True outcome means the
    converse direction of the lift does not hold in general.  Informational
    only, never a suite failure.
    """
    semiring = catalog.builtin("zmod_4").structure
    module = catalog.self_module(semiring)
    instance = build_expectation(semiring, module)
    ideal = Ideal(semiring, frozenset({0, 2}))
    box = box_ideal(instance, ideal, Subsemimodule(module, frozenset(module.elements())))
    box_wp = is_weakly_prime(box)
    ann = annihilator(module).members
    violating = [
        (a, b)
        for a in semiring.elements()
        for b in semiring.elements()
        if semiring.mul(a, b) == semiring.zero
        and a != semiring.zero
        and b != semiring.zero
        and (a not in ann or b not in ann)
    ]
    condition_holds = not violating
    return {
        "id": "weakly-prime-forward-probe",
        "instance": "E(zmod_4, zmod_4)",
        "ideal": [0, 2],
        "box_weakly_prime": box_wp,
        "annihilator_condition_holds": condition_holds,
        "condition_witness": list(violating[0]) if violating else None,
        "counterexample_exists": box_wp and not condition_holds,
    }


@dataclass
class VerificationReport:
    records: list[CheckRecord]
    informational: list[dict]
    grid_labels: list[str]
    seed: int

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, NA: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def by_theorem(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for r in self.records:
            row = table.setdefault(r.theorem, {PASS: 0, FAIL: 0, NA: 0})
            row[r.status] += 1
        return table

    def to_dict(self) -> dict:
        return {
            "schema": "semiringlab/verification-report/1",
            "seed": self.seed,
            "grid": {"instances": self.grid_labels},
            "checks": dict(CHECK_STATEMENTS),
            "records": [r.to_dict() for r in self.records],
            "informational": self.informational,
            "summary": self.counts(),
        }

    def format_matrix(self) -> str:
        lines = [f"{'check':<16} {'pass':>6} {'fail':>6} {'n/a':>6}"]
        for theorem, row in self.by_theorem().items():
            lines.append(f"{theorem:<16} {row[PASS]:>6} {row[FAIL]:>6} {row[NA]:>6}")
        counts = self.counts()
        lines.append(
            f"instances: {len(self.grid_labels)}  checks: {len(self.records)}  "
            f"pass: {counts[PASS]}  fail: {counts[FAIL]}  n/a: {counts[NA]}"
        )
        return "\n".join(lines)


def run_suite(
    cells: list[GridCell], *, seed: int = 0, jobs: int = 1, include_numeric: bool = True
) -> VerificationReport:
    """Run all checks over the grid, the numeric sections, and the probes."""
    records: list[CheckRecord] = []
    census: list[str] = []
    if jobs > 1:
        payload = [
            (
                cell.label,
                semiring_to_dict(cell.semiring),
                semimodule_to_dict(cell.module, include_base=False),
            )
            for cell in cells
        ]
        with multiprocessing.Pool(jobs) as pool:
            for cell_records, cell_census in pool.map(_run_cell_from_dicts, payload):
                records.extend(cell_records)
                census.extend(cell_census)
    else:
        for cell in cells:
            cell_records, cell_census = run_pair(cell.label, cell.semiring, cell.module)
            records.extend(cell_records)
            census.extend(cell_census)

    if include_numeric:
        started = time.perf_counter()
        law_failures = weight_law_failures(random.Random(seed), 1000)
        records.append(
            CheckRecord(
                theorem="numeric-weight-laws",
                instance="random weights",
                status=FAIL if law_failures else PASS,
                witness=law_failures[:3] or None,
                runtime=time.perf_counter() - started,
            )
        )
        started = time.perf_counter()
        oracle_failures = oracle_disagreements(random.Random(seed + 1), 100)
        records.append(
            CheckRecord(
                theorem="numeric-oracle",
                instance="random graphs",
                status=FAIL if oracle_failures else PASS,
                witness=oracle_failures[:3] or None,
                runtime=time.perf_counter() - started,
            )
        )

    informational = [weakly_prime_forward_probe()]
    informational.append(
        {
            "id": "strongly-associate-not-presimplifiable-census",
            "count": len(census),
            "examples": sorted(census)[:8],
        }
    )
    return VerificationReport(
        records=records,
        informational=informational,
        grid_labels=[cell.label for cell in cells],
        seed=seed,
    )
