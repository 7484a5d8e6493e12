import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiringlab import (
    CycleDetected,
    DimensionMismatch,
    InvalidGraph,
    NumericWeight,
    TooManyPaths,
    WeightedDag,
    ZeroMass,
    brute_force_total,
    count_paths,
    expectation,
    forward_total,
    graph_from_dict,
    graph_to_dict,
    lift_edge,
    wadd,
    wmul,
    wone,
    wzero,
)
from semiringlab.numeric import GraphEdge, oracle_disagreements, random_dag, weight_law_failures

finite = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
mass = st.floats(min_value=0.0, max_value=2.0, allow_nan=False)


def weights(dim):
    return st.builds(
        NumericWeight, mass, st.tuples(*[finite] * dim).map(tuple)
    )


def test_componentwise_sum():
    total = wadd(NumericWeight(0.3, (0.3,)), NumericWeight(0.7, (1.4,)))
    assert total.isclose(NumericWeight(1.0, (1.7,)))


def test_product_mixes_masses_and_vectors():
    # (0.5, [0.5]) * (0.4, [1.2]) -> (0.2, [0.5*1.2 + 0.4*0.5]) = (0.2, [0.8])
    product = wmul(NumericWeight(0.5, (0.5,)), NumericWeight(0.4, (1.2,)))
    assert product.isclose(NumericWeight(0.2, (0.8,)))


def test_identities():
    a = NumericWeight(0.4, (1.0, -2.0))
    assert wadd(a, wzero(2)).isclose(a)
    assert wmul(a, wone(2)).isclose(a)
    assert wmul(a, wzero(2)).isclose(wzero(2))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        wadd(wzero(1), wzero(2))
    with pytest.raises(DimensionMismatch):
        wmul(wone(1), wone(3))


def test_negative_mass_rejected():
    with pytest.raises(ValueError):
        NumericWeight(-0.1, ())
    with pytest.raises(ValueError):
        lift_edge(-1.0, (0.0,))


def test_lift_examples():
    assert lift_edge(0.3, (1.0,)).isclose(NumericWeight(0.3, (0.3,)))
    assert lift_edge(0.0, (5.0,)).isclose(wzero(1))
    assert lift_edge(1.0, (0.0,)).isclose(wone(1))


@given(mass, st.tuples(finite), mass, st.tuples(finite))
def test_lifted_edge_law(p1, v1, p2, v2):
    # product of lifted edges = (p1*p2, p1*p2*(v1+v2))
    lhs = wmul(lift_edge(p1, v1), lift_edge(p2, v2))
    rhs = NumericWeight(p1 * p2, tuple(p1 * p2 * (a + b) for a, b in zip(v1, v2)))
    assert lhs.isclose(rhs)


@given(weights(2), weights(2), weights(2))
def test_arithmetic_laws_hold_within_tolerance(a, b, c):
    assert wadd(a, b).isclose(wadd(b, a))
    assert wadd(wadd(a, b), c).isclose(wadd(a, wadd(b, c)))
    assert wmul(a, b).isclose(wmul(b, a))
    assert wmul(wmul(a, b), c).isclose(wmul(a, wmul(b, c)))
    assert wmul(a, wadd(b, c)).isclose(wadd(wmul(a, b), wmul(a, c)))


def parallel_graph():
    return graph_from_dict(
        {
            "d": 1,
            "nodes": ["s", "t"],
            "source": "s",
            "sink": "t",
            "edges": [
                {"from": "s", "to": "t", "p": 0.3, "v": [1.0]},
                {"from": "s", "to": "t", "p": 0.7, "v": [2.0]},
            ],
        }
    )


def chain_graph():
    return graph_from_dict(
        {
            "d": 1,
            "nodes": ["a", "b", "c"],
            "source": "a",
            "sink": "c",
            "edges": [
                {"from": "a", "to": "b", "p": 0.5, "v": [1.0]},
                {"from": "b", "to": "c", "p": 0.4, "v": [3.0]},
            ],
        }
    )


def diamond_graph(scale=1.0):
    return graph_from_dict(
        {
            "d": 2,
            "nodes": ["s", "u", "v", "t"],
            "source": "s",
            "sink": "t",
            "edges": [
                {"from": "s", "to": "u", "p": 0.2 * scale, "v": [1.0, 0.0]},
                {"from": "s", "to": "v", "p": 0.8 * scale, "v": [0.0, 1.0]},
                {"from": "u", "to": "t", "p": 0.9 * scale, "v": [2.0, 0.0]},
                {"from": "v", "to": "t", "p": 0.1 * scale, "v": [0.0, 2.0]},
            ],
        }
    )


def test_parallel_edges_total():
    g = parallel_graph()
    oracle = brute_force_total(g)
    assert oracle.isclose(NumericWeight(1.0, (1.7,)))
    assert forward_total(g).isclose(oracle)
    assert expectation(g) == pytest.approx((1.7,))


def test_single_chain_total():
    g = chain_graph()
    oracle = brute_force_total(g)
    assert oracle.isclose(NumericWeight(0.2, (0.8,)))
    assert forward_total(g).isclose(oracle)
    # one path: the expectation is the plain feature sum, whatever the masses
    assert expectation(g) == pytest.approx((4.0,))


def test_single_path_expectation_ignores_mass():
    heavier = graph_from_dict(
        {
            "d": 1,
            "nodes": ["a", "b", "c"],
            "source": "a",
            "sink": "c",
            "edges": [
                {"from": "a", "to": "b", "p": 1.9, "v": [1.0]},
                {"from": "b", "to": "c", "p": 0.1, "v": [3.0]},
            ],
        }
    )
    assert expectation(heavier) == pytest.approx((4.0,))


def test_dimension_zero_reduces_to_sum_product():
    g = graph_from_dict(
        {
            "d": 0,
            "nodes": ["s", "t"],
            "source": "s",
            "sink": "t",
            "edges": [
                {"from": "s", "to": "t", "p": 0.25, "v": []},
                {"from": "s", "to": "t", "p": 0.5, "v": []},
            ],
        }
    )
    total = forward_total(g)
    assert total.p == pytest.approx(0.75) and total.r == ()


def test_diamond_oracle_agreement():
    g = diamond_graph()
    assert forward_total(g).isclose(brute_force_total(g))


def test_expectation_scale_invariance_on_equal_length_paths():
    # every source-to-sink path of the diamond has two edges, so a uniform
    # mass rescaling cancels in the normalization
    base = expectation(diamond_graph())
    scaled = expectation(diamond_graph(scale=3.0))
    assert base == pytest.approx(scaled)


def test_zero_mass_raises():
    g = graph_from_dict(
        {
            "d": 1,
            "nodes": ["s", "t"],
            "source": "s",
            "sink": "t",
            "edges": [{"from": "s", "to": "t", "p": 0.0, "v": [1.0]}],
        }
    )
    with pytest.raises(ZeroMass):
        expectation(g)


def test_unreachable_sink_gives_zero():
    g = graph_from_dict(
        {"d": 1, "nodes": ["s", "x", "t"], "source": "s", "sink": "t",
         "edges": [{"from": "s", "to": "x", "p": 1.0, "v": [1.0]}]}
    )
    assert forward_total(g).isclose(wzero(1))
    assert brute_force_total(g).isclose(wzero(1))
    assert count_paths(g) == 0


def test_cycle_rejected_at_load():
    with pytest.raises(CycleDetected):
        graph_from_dict(
            {
                "d": 0,
                "nodes": ["s", "a", "b", "t"],
                "source": "s",
                "sink": "t",
                "edges": [
                    {"from": "s", "to": "a", "p": 1.0, "v": []},
                    {"from": "a", "to": "b", "p": 1.0, "v": []},
                    {"from": "b", "to": "a", "p": 1.0, "v": []},
                    {"from": "b", "to": "t", "p": 1.0, "v": []},
                ],
            }
        )


def test_graph_shape_errors():
    base = {"d": 1, "nodes": ["s", "t"], "source": "s", "sink": "t", "edges": []}
    with pytest.raises(InvalidGraph):
        graph_from_dict(dict(base, edges=[{"from": "t", "to": "s", "p": 1.0, "v": [0.0]}]))
    with pytest.raises(InvalidGraph):
        graph_from_dict(dict(base, edges=[{"from": "s", "to": "t", "p": -1.0, "v": [0.0]}]))
    with pytest.raises(InvalidGraph):
        graph_from_dict(dict(base, edges=[{"from": "s", "to": "t", "p": 1.0, "v": [0.0, 1.0]}]))
    with pytest.raises(InvalidGraph):
        graph_from_dict(dict(base, nodes=["s", "s", "t"]))


def test_prelifted_weights_rejected():
    with pytest.raises(InvalidGraph):
        WeightedDag(
            dim=1,
            nodes=("s", "t"),
            source="s",
            sink="t",
            edges=(GraphEdge("s", "t", NumericWeight(1.0, (0.0,)), (0.0,)),),
        )


def test_too_many_paths():
    with pytest.raises(TooManyPaths):
        brute_force_total(parallel_graph(), max_paths=1)


def test_round_trip_graph_serialization():
    g = diamond_graph()
    again = graph_from_dict(graph_to_dict(g))
    assert forward_total(again).isclose(forward_total(g))


def test_seeded_random_oracle_agreement():
    assert oracle_disagreements(random.Random(7), 25) == []


def test_seeded_law_scan():
    assert weight_law_failures(random.Random(7), 200) == []


def test_random_dag_respects_bounds():
    rng = random.Random(3)
    for _ in range(20):
        g = random_dag(rng)
        assert len(g.nodes) <= 8
        assert count_paths(g) <= 20
        assert g.dim <= 3
