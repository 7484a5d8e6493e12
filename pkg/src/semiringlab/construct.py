"""The expectation semiring of a semimodule.

Given a semiring S and an S-semimodule M, the product carrier S x M with

    (s1, m1) + (s2, m2) = (s1 + s2, m1 + m2)
    (s1, m1) * (s2, m2) = (s1*s2, s1*m2 + s2*m1)

is again a semiring (the semiring analog of extending a ring trivially by a
module).  This module builds it as a plain FiniteSemiring over row-major
pair indices, exhibits the degree decomposition into the scalar slice and
the zero-scalar slice, and cross-checks the triangular-record presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .tables import (
    BaseMismatch,
    FiniteSemimodule,
    FiniteSemiring,
    InvalidStructure,
    Subset,
    same_semiring,
    validate_semiring,
)


@dataclass(frozen=True)
class ExpectationInstance:
    """A built product semiring plus back-references to its factors.

    ``pairs[k]`` is the (scalar index, module index) pair at product index k;
    the bijection is stored rather than recomputed so subsets of the product
    map back to factor coordinates cheaply.
    """

    product: FiniteSemiring
    factor_semiring: FiniteSemiring
    factor_module: FiniteSemimodule
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        return {pair: k for k, pair in enumerate(self.pairs)}

    def index_of(self, s: int, x: int) -> int:
        return self._pair_index[(s, x)]

    def pair_of(self, k: int) -> tuple[int, int]:
        return self.pairs[k]


@dataclass(frozen=True)
class GradedDecomposition:
    """Degree-0 slice (s, 0) and degree-1 slice (0, m); degrees >= 2 are {zero}."""

    t0: Subset
    t1: Subset


def build_expectation(semiring: FiniteSemiring, module: FiniteSemimodule) -> ExpectationInstance:
    """Build the expectation semiring of ``module`` over ``semiring``.

    The result is run through the axiom validator, so a returned instance is
    a certified semiring and not just an application of the formulas.
    """
    if not same_semiring(module.base, semiring):
        raise BaseMismatch("module is not defined over the given semiring")
    n, m = semiring.size, module.size
    pairs = tuple((s, x) for s in range(n) for x in range(m))
    index = {pair: k for k, pair in enumerate(pairs)}

    add_rows = []
    mul_rows = []
    for s1, x1 in pairs:
        add_row = []
        mul_row = []
        for s2, x2 in pairs:
            add_row.append(index[(semiring.add(s1, s2), module.add(x1, x2))])
            corner = module.add(module.act(s1, x2), module.act(s2, x1))
            mul_row.append(index[(semiring.mul(s1, s2), corner)])
        add_rows.append(add_row)
        mul_rows.append(mul_row)

    s_name = semiring.name or "S"
    m_name = module.name or "M"
    product = validate_semiring(
        {
            "name": f"E({s_name}, {m_name})",
            "size": n * m,
            "zero": index[(semiring.zero, module.zero)],
            "one": index[(semiring.one, module.zero)],
            "add": add_rows,
            "mul": mul_rows,
        }
    )
    return ExpectationInstance(
        product=product, factor_semiring=semiring, factor_module=module, pairs=pairs
    )


def embed_s(instance: ExpectationInstance, s: int) -> int:
    """Product index of the embedded scalar, s -> (s, 0)."""
    return instance.index_of(s, instance.factor_module.zero)


def zero_scalar_slice(instance: ExpectationInstance) -> frozenset[int]:
    """Product indices of the pairs (0, x); this set is an ideal of the product."""
    s_zero = instance.factor_semiring.zero
    return frozenset(instance.index_of(s_zero, x) for x in instance.factor_module.elements())


def _additive_closure(semiring: FiniteSemiring, seed: frozenset[int]) -> frozenset[int]:
    members = set(seed)
    frontier = set(seed)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in members:
                s = semiring.add(a, b)
                if s not in members:
                    fresh.add(s)
        members |= fresh
        frontier = fresh
    return frozenset(members)


def zero_m_ideal_nilpotency(instance: ExpectationInstance) -> int:
    """Least k with the k-th power of the zero-scalar slice equal to {zero}.

    The k-th power of an ideal is the ideal generated by k-fold products of
    its elements; for an ideal that is just the additive closure of those
    products.  Returns 1 when the module is trivial, 2 otherwise.
    """
    product = instance.product
    slice_ideal = zero_scalar_slice(instance)
    zero_only = frozenset({product.zero})
    k_fold = slice_ideal
    for k in range(1, product.size + 2):
        if _additive_closure(product, k_fold) == zero_only:
            return k
        k_fold = frozenset(product.mul(a, b) for a in k_fold for b in slice_ideal)
    raise RuntimeError("zero-scalar slice failed to nilpotate within the carrier bound")


def matrix_iso_check(instance: ExpectationInstance) -> bool:
    """Cross-check the triangular-record presentation of the product.

    Materializes records (top-left, corner, bottom-right) = (s, m, s) with
    componentwise addition and row-by-column triangular multiplication
    (corner = a11*b12 + a12*b22, via the module action), validates the
    resulting tables as a semiring, and compares them with the product under
    the pair bijection.  A theorem says this always returns True; False
    signals an implementation bug.
    """
    semiring = instance.factor_semiring
    module = instance.factor_module
    product = instance.product

    records = tuple((s, x, s) for s, x in instance.pairs)
    rec_index = {rec: k for k, rec in enumerate(records)}

    def radd(a, b):
        return (
            semiring.add(a[0], b[0]),
            module.add(a[1], b[1]),
            semiring.add(a[2], b[2]),
        )

    def rmul(a, b):
        return (
            semiring.mul(a[0], b[0]),
            module.add(module.act(a[0], b[1]), module.act(b[2], a[1])),
            semiring.mul(a[2], b[2]),
        )

    count = len(records)
    add_rows = []
    mul_rows = []
    for i in range(count):
        add_row = []
        mul_row = []
        for j in range(count):
            for op, row in ((radd, add_row), (rmul, mul_row)):
                rec = op(records[i], records[j])
                if rec[0] != rec[2] or rec not in rec_index:
                    return False
                row.append(rec_index[rec])
        add_rows.append(add_row)
        mul_rows.append(mul_row)

    try:
        record_semiring = validate_semiring(
            {
                "name": "triangular-records",
                "size": count,
                "zero": rec_index[(semiring.zero, module.zero, semiring.zero)],
                "one": rec_index[(semiring.one, module.zero, semiring.one)],
                "add": add_rows,
                "mul": mul_rows,
            }
        )
    except InvalidStructure:
        return False

    return (
        record_semiring.add_table == product.add_table
        and record_semiring.mul_table == product.mul_table
        and record_semiring.zero == product.zero
        and record_semiring.one == product.one
    )


def graded_decomposition(instance: ExpectationInstance) -> GradedDecomposition:
    """Split the product into its scalar slice T0 and zero-scalar slice T1.

    Verifies that every product element is t0 + t1 for exactly one pair
    (t0, t1) in T0 x T1 and that degrees add under multiplication
    (T0*T0 in T0, T0*T1 and T1*T0 in T1, T1*T1 = {zero}).
    """
    semiring = instance.factor_semiring
    module = instance.factor_module
    product = instance.product

    t0 = frozenset(instance.index_of(s, module.zero) for s in semiring.elements())
    t1 = zero_scalar_slice(instance)

    for k in product.elements():
        hits = [(a, b) for a in t0 for b in t1 if product.add(a, b) == k]
        if len(hits) != 1:
            raise RuntimeError(f"element {instance.pair_of(k)} has {len(hits)} degree decompositions")

    targets = {(0, 0): t0, (0, 1): t1, (1, 0): t1, (1, 1): frozenset({product.zero})}
    slices = {0: t0, 1: t1}
    for (i, j), allowed in targets.items():
        for a in slices[i]:
            for b in slices[j]:
                if product.mul(a, b) not in allowed:
                    raise RuntimeError(
                        f"degree {i} times degree {j} escapes degree {i + j} at "
                        f"{instance.pair_of(a)} * {instance.pair_of(b)}"
                    )
    return GradedDecomposition(t0=Subset(product, t0), t1=Subset(product, t1))
