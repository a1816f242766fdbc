"""Gain-graph data model: vertices, gained edges, degree statistics.

Edges are stored once, in canonical orientation u < v, with the gain for
the direction u -> v.  The reverse gain is always the inverse, so
Hermiticity of the derived matrices holds by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .gains import NEUTRAL, Gain, as_gain


class GraphError(ValueError):
    """Invalid graph construction or query."""


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    gain: Gain


class GainGraph:
    """Simple undirected graph with one unit-complex gain per edge.

    Immutable after construction.  Use :func:`build_graph` to create one
    from an arbitrary edge list; the constructor assumes edges are already
    canonical (u < v, no loops, no duplicates).
    """

    __slots__ = ("n", "edges", "_gain_map", "_adj")

    def __init__(self, n: int, edges: Sequence[Edge]):
        self.n = int(n)
        self.edges: Tuple[Edge, ...] = tuple(edges)
        gain_map: Dict[Tuple[int, int], Gain] = {}
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            gain_map[(e.u, e.v)] = e.gain
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        self._gain_map = gain_map
        self._adj = adj

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._gain_map

    def gain(self, u: int, v: int) -> Gain:
        """Gain for the oriented edge u -> v."""
        if u < v:
            g = self._gain_map.get((u, v))
        else:
            g = self._gain_map.get((v, u))
            g = g.inverse() if g is not None else None
        if g is None:
            raise GraphError(f"no edge between {u} and {v}")
        return g

    def neighbors(self, u: int) -> Sequence[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def __eq__(self, other):
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"GainGraph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Tuple[int, int, object]]) -> GainGraph:
    """Build a canonical GainGraph from (u, v, gain) triples.

    Inputs with u > v are flipped, inverting the gain.  Loops, duplicate
    edges and out-of-range indices are rejected.
    """
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    seen = set()
    edges = []
    for u, v, raw in edge_list:
        g = as_gain(raw)
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u > v:
            u, v = v, u
            g = g.inverse()
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append(Edge(u, v, g))
    return GainGraph(n, edges)


# -- degree statistics ----------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree data plus globals.

    d[j]          plain degree
    net[j]        gain-weighted neighbor sum (complex)
    gdeg[j]       counts of each gain seen from vertex j
    m2[j]         average degree of the neighbors of j (0 for isolated)
    delta         maximum degree
    used_gains    all gains appearing on oriented edges
    """

    d: np.ndarray
    net: np.ndarray
    gdeg: Tuple[Dict[Gain, int], ...]
    m2: np.ndarray
    delta: int
    used_gains: FrozenSet[Gain]


def degree_profile(g: GainGraph) -> DegreeProfile:
    n = g.n
    d = np.zeros(n, dtype=np.int64)
    net = np.zeros(n, dtype=np.complex128)
    gdeg: List[Dict[Gain, int]] = [dict() for _ in range(n)]
    used = set()
    for e in g.edges:
        gu, gv = e.gain, e.gain.inverse()
        used.add(gu)
        used.add(gv)
        d[e.u] += 1
        d[e.v] += 1
        net[e.u] += gu.value
        net[e.v] += gv.value
        gdeg[e.u][gu] = gdeg[e.u].get(gu, 0) + 1
        gdeg[e.v][gv] = gdeg[e.v].get(gv, 0) + 1
    m2 = np.zeros(n, dtype=np.float64)
    for j in range(n):
        if d[j] > 0:
            m2[j] = sum(d[i] for i in g.neighbors(j)) / d[j]
    delta = int(d.max()) if n > 0 else 0
    return DegreeProfile(d, net, tuple(gdeg), m2, delta, frozenset(used))


# -- walks and edits ------------------------------------------------------

def gain_of_walk(g: GainGraph, walk: Sequence[int]) -> Gain:
    """Product of oriented-edge gains along a vertex sequence."""
    total = NEUTRAL
    for a, b in zip(walk, walk[1:]):
        total = total * g.gain(a, b)
    return total


def delete_edge(g: GainGraph, u: int, v: int) -> GainGraph:
    if u > v:
        u, v = v, u
    if not g.has_edge(u, v):
        raise GraphError(f"no edge between {u} and {v}")
    return GainGraph(g.n, [e for e in g.edges if (e.u, e.v) != (u, v)])


def negate_gains(g: GainGraph) -> GainGraph:
    """Multiply every gain by -1."""
    return GainGraph(g.n, [Edge(e.u, e.v, e.gain.negated()) for e in g.edges])


def same_underlying(g1: GainGraph, g2: GainGraph) -> bool:
    return g1.n == g2.n and [(e.u, e.v) for e in g1.edges] == [
        (e.u, e.v) for e in g2.edges
    ]


def gain_quotient(g1: GainGraph, g2: GainGraph) -> GainGraph:
    """Edge-wise quotient phi1^-1 * phi2 on a shared underlying graph."""
    if not same_underlying(g1, g2):
        raise GraphError("gain_quotient requires identical underlying graphs")
    edges = [
        Edge(e1.u, e1.v, e1.gain.inverse() * e2.gain)
        for e1, e2 in zip(g1.edges, g2.edges)
    ]
    return GainGraph(g1.n, edges)


# -- inverse-pair partition ------------------------------------------------

@dataclass(frozen=True)
class InversePairPartition:
    """Edge partition of a gain graph by inverse pairs {g, g^-1}.

    Each subgraph keeps the full vertex set; the subgraph Laplacians sum
    to the Laplacian of the whole graph.
    """

    pairs: Tuple[FrozenSet[Gain], ...]
    subgraphs: Tuple[GainGraph, ...]


def inverse_pair_partition(g: GainGraph) -> InversePairPartition:
    buckets: Dict[FrozenSet[Gain], List[Edge]] = {}
    order: List[FrozenSet[Gain]] = []
    for e in g.edges:
        key = frozenset({e.gain, e.gain.inverse()})
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(e)
    subs = tuple(GainGraph(g.n, buckets[k]) for k in order)
    return InversePairPartition(tuple(order), subs)


# -- connectivity ----------------------------------------------------------

def connected_components(g: GainGraph) -> List[List[int]]:
    """Vertex lists of the connected components, BFS order."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: GainGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
