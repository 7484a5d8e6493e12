import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiringlab import (
    BaseMismatch,
    InvalidStructure,
    SizeMismatch,
    builtin,
    is_commutative_mul,
    semiring_to_dict,
    semimodule_violations,
    semiring_violations,
    v_set,
    validate_semimodule,
    validate_semiring,
)

BOOLEAN = {
    "name": "boolean",
    "size": 2,
    "zero": 0,
    "one": 1,
    "add": [[0, 1], [1, 1]],
    "mul": [[0, 0], [0, 1]],
}

ZMOD4 = {
    "name": "zmod_4",
    "size": 4,
    "zero": 0,
    "one": 1,
    "add": [[(i + j) % 4 for j in range(4)] for i in range(4)],
    "mul": [[(i * j) % 4 for j in range(4)] for i in range(4)],
}


def test_boolean_tables_validate():
    s = validate_semiring(BOOLEAN)
    assert s.size == 2 and s.add(1, 1) == 1 and s.mul(1, 1) == 1


def test_zmod4_tables_validate():
    s = validate_semiring(ZMOD4)
    assert s.add(3, 2) == 1 and s.mul(2, 2) == 0


def test_broken_additive_identity_is_named():
    # 0+1 = 0 over {0,1}: zero stops being the additive identity, witness 1
    data = dict(BOOLEAN, add=[[0, 0], [0, 0]])
    violations = semiring_violations(data)
    assert any(v.axiom == "add_identity" and v.witness == (1,) for v in violations)
    with pytest.raises(InvalidStructure):
        validate_semiring(data)


def test_all_violations_reported_not_just_first():
    data = dict(BOOLEAN, add=[[0, 0], [0, 0]], mul=[[0, 0], [0, 0]])
    names = {v.axiom for v in semiring_violations(data)}
    assert "add_identity" in names and "mul_identity" in names


def test_zero_equal_one_rejected():
    data = dict(ZMOD4, one=0)
    names = {v.axiom for v in semiring_violations(data)}
    assert "zero_one_distinct" in names


def test_size_mismatch_raises():
    with pytest.raises(SizeMismatch):
        semiring_violations(dict(BOOLEAN, add=[[0, 1]]))
    with pytest.raises(SizeMismatch):
        semiring_violations(dict(BOOLEAN, size=1, add=[[0]], mul=[[0]]))
    with pytest.raises(SizeMismatch):
        semiring_violations(dict(BOOLEAN, zero=5))


def test_entry_out_of_range_reported():
    data = dict(BOOLEAN, add=[[0, 1], [1, 7]])
    violations = semiring_violations(data)
    assert [(v.axiom, v.witness) for v in violations] == [("add_entry_range", (1, 1))]


def mod2_action_data():
    # reduction action of the modulus-4 semiring on {0, 1}: s . x = (s * x) mod 2
    return {
        "name": "zmod_2",
        "size": 2,
        "zero": 0,
        "add": [[0, 1], [1, 0]],
        "action": [[(s * x) % 2 for x in range(2)] for s in range(4)],
    }


def test_mod2_reduction_is_a_module():
    base = validate_semiring(ZMOD4)
    data = mod2_action_data()
    assert data["action"] == [[0, 0], [0, 1], [0, 0], [0, 1]]
    module = validate_semimodule(base, data)
    assert module.act(3, 1) == 1 and module.act(2, 1) == 0


def test_self_action_is_a_module():
    base = validate_semiring(ZMOD4)
    data = {
        "size": 4,
        "zero": 0,
        "add": ZMOD4["add"],
        "action": ZMOD4["mul"],
    }
    validate_semimodule(base, data)


def test_broken_action_identity_is_named():
    base = validate_semiring(ZMOD4)
    data = mod2_action_data()
    data["action"][1][1] = 0
    violations = semimodule_violations(base, data)
    assert any(v.axiom == "action_identity" and v.witness == (1,) for v in violations)


def test_broken_zero_scalar_action_is_named():
    base = validate_semiring(ZMOD4)
    data = mod2_action_data()
    data["action"][0][1] = 1
    violations = semimodule_violations(base, data)
    assert any(v.axiom == "action_zero_scalar" for v in violations)


def test_embedded_base_must_match():
    base = validate_semiring(ZMOD4)
    data = mod2_action_data()
    data["base"] = BOOLEAN
    with pytest.raises(BaseMismatch):
        semimodule_violations(base, data)


def test_v_set_examples():
    assert v_set(validate_semiring(BOOLEAN)).indices() == (0,)
    assert v_set(validate_semiring(ZMOD4)).indices() == (0, 1, 2, 3)
    trunc = builtin("trunc_nat_2").structure
    assert v_set(trunc).indices() == (0,)


@pytest.mark.parametrize("name", ["boolean", "zmod_4", "chain_2", "diamond"])
def test_v_set_membership_law(name):
    s = builtin(name).structure
    members = v_set(s).members
    for x in s.elements():
        for y in s.elements():
            assert (s.add(x, y) in members) == (x in members and y in members)


def test_commutativity_probe():
    assert is_commutative_mul(validate_semiring(BOOLEAN))
    assert is_commutative_mul(validate_semiring(ZMOD4))
    lopsided = dict(BOOLEAN, mul=[[0, 0], [1, 1]])
    names = {v.axiom for v in semiring_violations(lopsided)}
    assert "mul_commutativity" in names


@given(st.permutations(list(range(4))))
def test_relabeling_preserves_validity(perm):
    # a bijective renaming of the carrier keeps every axiom intact
    inverse = [perm.index(i) for i in range(4)]
    relabeled = {
        "name": "relabeled",
        "size": 4,
        "zero": perm[0],
        "one": perm[1],
        "add": [[perm[ZMOD4["add"][inverse[i]][inverse[j]]] for j in range(4)] for i in range(4)],
        "mul": [[perm[ZMOD4["mul"][inverse[i]][inverse[j]]] for j in range(4)] for i in range(4)],
    }
    assert semiring_violations(relabeled) == []


def test_round_trip_serialization():
    s = validate_semiring(ZMOD4)
    assert validate_semiring(semiring_to_dict(s)) == s
