"""Expectation arithmetic over nonnegative mass plus feature-vector weights.

A weight is a pair (p, r): a nonnegative mass and an accumulated vector of
dimension d.  Addition is componentwise and multiplication is
(p1*p2, p1*r2 + p2*r1), so lifting an edge with mass p and feature vector v
to (p, p*v) makes the product along a path equal (prod p, (prod p)*(sum v)),
and the sum over all source-to-sink paths of a DAG carries both the total
mass and the mass-weighted feature total in one forward pass.

Equality of weights is tolerance-based (1e-9 relative, 1e-12 absolute):
double-precision path products at desk scale.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

TOL_REL = 1e-9
TOL_ABS = 1e-12


class DimensionMismatch(ValueError):
    """Weights of different vector dimensions cannot be combined."""


class ZeroMass(ValueError):
    """Expectation is undefined when the total mass is (numerically) zero."""


class CycleDetected(ValueError):
    """The edge list does not describe an acyclic graph."""


class TooManyPaths(ValueError):
    """Path enumeration refused: more source-to-sink paths than the bound."""


class InvalidGraph(ValueError):
    """The graph violates a shape requirement (labels, endpoints, edge data)."""


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=TOL_REL, abs_tol=TOL_ABS)


@dataclass(frozen=True)
class NumericWeight:
    """Pair of nonnegative mass p and feature-total vector r."""

    p: float
    r: tuple[float, ...]

    def __post_init__(self) -> None:
        if isinstance(self.p, NumericWeight) or any(isinstance(x, NumericWeight) for x in self.r):
            raise TypeError("weights nest raw floats, not other weights")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "r", tuple(float(x) for x in self.r))
        if not self.p >= 0.0:
            raise ValueError(f"mass must be nonnegative, got {self.p}")

    @property
    def dim(self) -> int:
        return len(self.r)

    def isclose(self, other: "NumericWeight") -> bool:
        if self.dim != other.dim:
            return False
        return _close(self.p, other.p) and all(_close(x, y) for x, y in zip(self.r, other.r))


def wzero(dim: int) -> NumericWeight:
    return NumericWeight(0.0, (0.0,) * dim)


def wone(dim: int) -> NumericWeight:
    return NumericWeight(1.0, (0.0,) * dim)


def wadd(a: NumericWeight, b: NumericWeight) -> NumericWeight:
    """Componentwise sum."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim}")
    return NumericWeight(a.p + b.p, tuple(x + y for x, y in zip(a.r, b.r)))


def wmul(a: NumericWeight, b: NumericWeight) -> NumericWeight:
    """(p1*p2, p1*r2 + p2*r1); the identity is (1, zero vector)."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim}")
    return NumericWeight(a.p * b.p, tuple(a.p * y + b.p * x for x, y in zip(a.r, b.r)))


def lift_edge(p: float, v: Sequence[float]) -> NumericWeight:
    """Lift raw edge data (p, v) to the weight (p, p*v)."""
    if p < 0:
        raise ValueError(f"edge mass must be nonnegative, got {p}")
    return NumericWeight(p, tuple(p * x for x in v))


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    p: float
    v: tuple[float, ...]


@dataclass(frozen=True)
class WeightedDag:
    """Acyclic graph with raw (p, v) edge data, validated and ordered at load time.

    Edges carry unlifted data; lifting happens inside the traversals, and
    anything weight-shaped on an edge is rejected to prevent double lifting.
    """

    dim: int
    nodes: tuple[str, ...]
    source: str
    sink: str
    edges: tuple[GraphEdge, ...]

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise InvalidGraph("duplicate node labels")
        known = set(self.nodes)
        if self.source not in known or self.sink not in known:
            raise InvalidGraph("source and sink must be declared nodes")
        for e in self.edges:
            if isinstance(e.p, NumericWeight) or isinstance(e.v, NumericWeight):
                raise InvalidGraph("edges carry raw (p, v) data; pre-lifted weights are rejected")
            if e.src not in known or e.dst not in known:
                raise InvalidGraph(f"edge {e.src}->{e.dst} references unknown nodes")
            if not float(e.p) >= 0.0:
                raise InvalidGraph(f"edge {e.src}->{e.dst} has negative mass {e.p}")
            if len(e.v) != self.dim:
                raise InvalidGraph(
                    f"edge {e.src}->{e.dst} vector has dimension {len(e.v)}, expected {self.dim}"
                )
            if e.dst == self.source:
                raise InvalidGraph("the source must have no incoming edges")
            if e.src == self.sink:
                raise InvalidGraph("the sink must have no outgoing edges")
        object.__setattr__(self, "_topo", self._toposort())

    def _toposort(self) -> tuple[str, ...]:
        incoming = {node: 0 for node in self.nodes}
        for e in self.edges:
            incoming[e.dst] += 1
        ready = [node for node in self.nodes if incoming[node] == 0]
        order = []
        while ready:
            node = ready.pop(0)
            order.append(node)
            for e in self.edges:
                if e.src == node:
                    incoming[e.dst] -= 1
                    if incoming[e.dst] == 0:
                        ready.append(e.dst)
        if len(order) != len(self.nodes):
            raise CycleDetected("edge list contains a directed cycle")
        return tuple(order)

    @property
    def topological_order(self) -> tuple[str, ...]:
        return self._topo  # type: ignore[attr-defined]

    def outgoing(self, node: str) -> list[GraphEdge]:
        return [e for e in self.edges if e.src == node]


def graph_from_dict(data: Mapping) -> WeightedDag:
    """Load the graph JSON shape {d, nodes, source, sink, edges:[{from,to,p,v}]}."""
    try:
        edges = tuple(
            GraphEdge(src=e["from"], dst=e["to"], p=float(e["p"]), v=tuple(float(x) for x in e.get("v", ())))
            for e in data["edges"]
        )
        return WeightedDag(
            dim=int(data["d"]),
            nodes=tuple(data["nodes"]),
            source=data["source"],
            sink=data["sink"],
            edges=edges,
        )
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"malformed graph data: {exc}") from exc


def graph_to_dict(g: WeightedDag) -> dict:
    return {
        "d": g.dim,
        "nodes": list(g.nodes),
        "source": g.source,
        "sink": g.sink,
        "edges": [{"from": e.src, "to": e.dst, "p": e.p, "v": list(e.v)} for e in g.edges],
    }


def forward_total(g: WeightedDag) -> NumericWeight:
    """Sum over all source-to-sink paths of the product of lifted edges.

    One pass in topological order; an unreachable sink yields the zero
    weight.  The mass component is the total path mass Z and the vector
    component is the mass-weighted sum of per-path feature totals.
    """
    totals: dict[str, NumericWeight] = {g.source: wone(g.dim)}
    for node in g.topological_order:
        acc = totals.get(node)
        if acc is None:
            continue
        for e in g.outgoing(node):
            contribution = wmul(acc, lift_edge(e.p, e.v))
            prev = totals.get(e.dst)
            totals[e.dst] = contribution if prev is None else wadd(prev, contribution)
    return totals.get(g.sink, wzero(g.dim))


def count_paths(g: WeightedDag) -> int:
    counts: dict[str, int] = {g.source: 1}
    for node in g.topological_order:
        c = counts.get(node, 0)
        if c == 0:
            continue
        for e in g.outgoing(node):
            counts[e.dst] = counts.get(e.dst, 0) + c
    return counts.get(g.sink, 0)


def brute_force_total(g: WeightedDag, max_paths: int = 20) -> NumericWeight:
    """Independent oracle: enumerate every path explicitly.

    Each path contributes (prod p, (prod p) * (sum v)) computed directly on
    floats, bypassing the weight multiplication used by forward_total.
    """
    total = wzero(g.dim)
    seen = 0
    stack: list[tuple[str, float, tuple[float, ...]]] = [(g.source, 1.0, (0.0,) * g.dim)]
    while stack:
        node, mass, vec = stack.pop()
        if node == g.sink:
            seen += 1
            if seen > max_paths:
                raise TooManyPaths(f"more than {max_paths} source-to-sink paths")
            total = wadd(total, NumericWeight(mass, tuple(mass * x for x in vec)))
            continue
        for e in g.outgoing(node):
            stack.append((e.dst, mass * e.p, tuple(a + b for a, b in zip(vec, e.v))))
    return total


def expectation(g: WeightedDag) -> tuple[float, ...]:
    """Expected per-path feature total under path mass normalized by Z."""
    total = forward_total(g)
    if total.p <= TOL_ABS:
        raise ZeroMass(f"total mass {total.p} is numerically zero")
    return tuple(x / total.p for x in total.r)


def random_weight(rng: random.Random, dim: int) -> NumericWeight:
    return NumericWeight(rng.uniform(0.0, 2.0), tuple(rng.uniform(-2.0, 2.0) for _ in range(dim)))


def weight_law_failures(rng: random.Random, trials: int) -> list[str]:
    """Check the arithmetic laws on random weight triples; return failures."""
    failures = []
    for t in range(trials):
        dim = rng.randrange(0, 4)
        a, b, c = (random_weight(rng, dim) for _ in range(3))
        zero, one = wzero(dim), wone(dim)
        laws = [
            ("add_commutativity", wadd(a, b), wadd(b, a)),
            ("add_associativity", wadd(wadd(a, b), c), wadd(a, wadd(b, c))),
            ("add_identity", wadd(a, zero), a),
            ("mul_commutativity", wmul(a, b), wmul(b, a)),
            ("mul_associativity", wmul(wmul(a, b), c), wmul(a, wmul(b, c))),
            ("mul_identity", wmul(a, one), a),
            ("distributivity", wmul(a, wadd(b, c)), wadd(wmul(a, b), wmul(a, c))),
            ("zero_annihilation", wmul(a, zero), zero),
        ]
        for label, lhs, rhs in laws:
            if not lhs.isclose(rhs):
                failures.append(f"trial {t}: {label}: {lhs} != {rhs}")
    return failures


def random_dag(
    rng: random.Random,
    max_nodes: int = 8,
    max_paths: int = 20,
    max_dim: int = 3,
    edge_density: float = 0.45,
) -> WeightedDag:
    """Random acyclic graph with a bounded path count (rejection sampled)."""
    while True:
        count = rng.randint(2, max_nodes)
        dim = rng.randint(0, max_dim)
        nodes = tuple(f"n{i}" for i in range(count))
        edges = []
        for i in range(count):
            for j in range(i + 1, count):
                if rng.random() < edge_density:
                    edges.append(
                        GraphEdge(
                            src=nodes[i],
                            dst=nodes[j],
                            p=rng.uniform(0.0, 1.5),
                            v=tuple(rng.uniform(-2.0, 2.0) for _ in range(dim)),
                        )
                    )
        g = WeightedDag(dim=dim, nodes=nodes, source=nodes[0], sink=nodes[-1], edges=tuple(edges))
        if count_paths(g) <= max_paths:
            return g


def oracle_disagreements(rng: random.Random, graphs: int) -> list[str]:
    """Compare the forward pass against path enumeration on random DAGs."""
    failures = []
    for i in range(graphs):
        g = random_dag(rng)
        fast = forward_total(g)
        slow = brute_force_total(g, max_paths=20)
        if not fast.isclose(slow):
            failures.append(f"graph {i}: forward {fast} vs enumerated {slow}")
    return failures
