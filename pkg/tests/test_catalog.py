import pytest

from semiringlab import (
    BaseMismatch,
    OrderTooLarge,
    UnknownName,
    are_isomorphic,
    builtin,
    builtin_pairs,
    enumerate_semimodules,
    enumerate_semirings,
    product_module,
    self_module,
    standard_modules,
    zmod_quotient_module,
)
from semiringlab.catalog import BUILTIN_SEMIRING_NAMES


def test_builtin_names_all_resolve():
    for name in BUILTIN_SEMIRING_NAMES:
        entry = builtin(name)
        assert entry.provenance == "builtin"
        assert entry.structure.size >= 2


def test_builtin_spot_tables():
    b = builtin("boolean").structure
    assert b.add(1, 1) == 1
    trunc = builtin("trunc_nat_2").structure
    assert trunc.add(1, 2) == 2 and trunc.mul(2, 2) == 2
    chain = builtin("chain_2").structure
    assert chain.one == 2 and chain.mul(1, 2) == 1
    diamond = builtin("diamond").structure
    assert diamond.add(1, 2) == 3 and diamond.mul(1, 2) == 0


def test_unknown_names_rejected():
    for name in ("nonsense", "field_4", "zmod_1", "chain_0", "trunc_nat_0"):
        with pytest.raises(UnknownName):
            builtin(name)


def test_field_names_alias_modular_tables():
    assert builtin("field_3").structure.add_table == builtin("zmod_3").structure.add_table


def test_exactly_two_semirings_of_order_two():
    entries = enumerate_semirings(2)
    assert len(entries) == 2
    # the two differ only in 1+1, which also separates them up to isomorphism
    assert {e.structure.add(1, 1) for e in entries} == {0, 1}
    assert not are_isomorphic(entries[0].structure, entries[1].structure)


def test_order_three_contains_the_expected_builtins():
    entries = enumerate_semirings(3)
    assert entries
    for name in ("zmod_3", "chain_2", "trunc_nat_2"):
        target = builtin(name).structure
        assert any(are_isomorphic(e.structure, target) for e in entries), name


def test_order_four_contains_its_builtins():
    entries = enumerate_semirings(4)
    for name in ("zmod_4", "diamond", "trunc_nat_3"):
        target = builtin(name).structure
        assert any(are_isomorphic(e.structure, target) for e in entries), name
    deduped = enumerate_semirings(4, dedup=True)
    assert len(deduped) <= len(entries)


def test_enumeration_is_deterministic():
    first = [(e.name, e.structure.add_table, e.structure.mul_table) for e in enumerate_semirings(3)]
    second = [(e.name, e.structure.add_table, e.structure.mul_table) for e in enumerate_semirings(3)]
    assert first == second


def test_enumeration_order_bounds():
    with pytest.raises(OrderTooLarge):
        enumerate_semirings(5)
    with pytest.raises(OrderTooLarge):
        enumerate_semirings(1)
    with pytest.raises(OrderTooLarge):
        enumerate_semimodules(builtin("boolean").structure, 5)


def test_module_enumeration_ground_truth():
    b = builtin("boolean").structure
    only = enumerate_semimodules(b, 1)
    assert len(only) == 1 and only[0].structure.size == 1

    mods2 = enumerate_semimodules(b, 2)
    assert len(mods2) == 1
    assert mods2[0].structure.add_table == b.add_table
    assert mods2[0].structure.action_table == b.mul_table

    z2 = builtin("zmod_2").structure
    mods = enumerate_semimodules(z2, 2)
    assert any(
        m.structure.add_table == z2.add_table and m.structure.action_table == z2.mul_table
        for m in mods
    )

    z4 = builtin("zmod_4").structure
    reduction = zmod_quotient_module(4, 2)
    assert any(
        m.structure.add_table == reduction.add_table
        and m.structure.action_table == reduction.action_table
        for m in enumerate_semimodules(z4, 2)
    )


def test_standard_modules_are_validated_for_every_builtin():
    for name in BUILTIN_SEMIRING_NAMES:
        semiring = builtin(name).structure
        modules = standard_modules(name, semiring)
        assert modules[0].size == 1
        assert any(m.size == semiring.size for m in modules)


def test_quotient_action_values():
    reduction = zmod_quotient_module(4, 2)
    assert reduction.action_table == ((0, 0), (0, 1), (0, 0), (0, 1))
    with pytest.raises(BaseMismatch):
        zmod_quotient_module(4, 3)


def test_product_module_requires_common_base():
    b = builtin("boolean").structure
    z2 = builtin("zmod_2").structure
    squared = product_module(self_module(b), self_module(b))
    assert squared.size == 4
    with pytest.raises(BaseMismatch):
        product_module(self_module(b), self_module(z2))


def test_builtin_pairs_respect_the_size_bound():
    pairs = builtin_pairs(max_product=16)
    assert pairs
    assert all(s.size * m.size <= 16 for _n, s, m in pairs)
    names = {name for name, _s, _m in pairs}
    assert "zmod_4" in names and "diamond" in names


def test_isomorphism_probe():
    assert not are_isomorphic(builtin("boolean").structure, builtin("zmod_2").structure)
    assert are_isomorphic(builtin("chain_2").structure, builtin("chain_2").structure)
