"""Generators for the named gain-graph families.

Vertex labeling conventions (also documented in the README):

cycle(n, total):     vertices 0..n-1 around the cycle; all edges neutral
                     except the closing edge, which carries the whole
                     cycle gain: walking 0 -> 1 -> ... -> n-1 -> 0 gives
                     ``total``.
path(n, gains):      vertices 0..n-1 along the path.
star(N):             leaves 0..N-2, center N-1.
broom(N):            leaves 0..N-4, pendant path N-3 -- N-2, center N-1
                     (center adjacent to the leaves and to N-3).
cone_triangle(n, g): triangle partners 0 and 1, pendant leaves 2..n-2,
                     apex n-1; edge (0,1) carries g so the triangle gain
                     walked (n-1) -> 0 -> 1 -> (n-1) is g.
complete(n):         all-neutral complete graph.
random(n, p, seed):  vertex pairs scanned in lexicographic order; for each
                     pair the PRNG (numpy PCG64, 64-bit seed) draws one
                     uniform for edge inclusion and one for the gain, in
                     that order, whether or not the edge is included.
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .gains import HALF_TURN, NEUTRAL, Gain, as_gain
from .graph import Edge, GainGraph, GraphError, build_graph


def cycle(n: int, total=NEUTRAL) -> GainGraph:
    """Cycle C_n whose total gain (walked 0 -> 1 -> ... -> 0) is ``total``."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    total = as_gain(total)
    edges = [(i, i + 1, NEUTRAL) for i in range(n - 1)]
    # closing edge oriented (n-1) -> 0 carries the cycle gain
    edges.append((n - 1, 0, total))
    return build_graph(n, edges)


def path(n: int, gains: Optional[Sequence] = None) -> GainGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    if gains is None:
        gains = [NEUTRAL] * (n - 1)
    gains = [as_gain(x) for x in gains]
    if len(gains) != n - 1:
        raise GraphError(f"path on {n} vertices needs {n - 1} gains")
    return build_graph(n, [(i, i + 1, g) for i, g in enumerate(gains)])


def star(N: int) -> GainGraph:
    """T1: a center adjacent to N-1 leaves."""
    if N < 3:
        raise GraphError("star needs N >= 3")
    return build_graph(N, [(i, N - 1, NEUTRAL) for i in range(N - 1)])


def broom(N: int) -> GainGraph:
    """T2: a center adjacent to N-3 leaves and to a 2-edge pendant path."""
    if N < 4:
        raise GraphError("broom needs N >= 4")
    edges = [(i, N - 1, NEUTRAL) for i in range(N - 3)]
    edges.append((N - 3, N - 1, NEUTRAL))
    edges.append((N - 3, N - 2, NEUTRAL))
    return build_graph(N, edges)


def cone_triangle(n: int, g=NEUTRAL) -> GainGraph:
    """An apex in one triangle of gain ``g`` plus n-3 pendant edges."""
    if n < 3:
        raise GraphError("cone_triangle needs n >= 3")
    g = as_gain(g)
    edges = [(i, n - 1, NEUTRAL) for i in range(n - 1)]
    edges.append((0, 1, g))
    return build_graph(n, edges)


def complete(n: int) -> GainGraph:
    if n < 1:
        raise GraphError("complete needs n >= 1")
    return build_graph(n, [(i, j, NEUTRAL) for i in range(n) for j in range(i + 1, n)])


def random_graph(n: int, p: float, seed: int) -> GainGraph:
    """G(n, p) with uniform random float-turn gains; reproducible per seed."""
    if n < 0:
        raise GraphError("random needs n >= 0")
    if not 0.0 <= p <= 1.0:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(np.uint64(seed))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            keep = rng.random()
            turns = rng.random()
            if keep < p:
                edges.append(Edge(u, v, Gain(turns)))
    return GainGraph(n, edges)


def all_negative(g: GainGraph) -> GainGraph:
    """Same underlying graph with every gain set to -1."""
    return GainGraph(g.n, [Edge(e.u, e.v, HALF_TURN) for e in g.edges])


def all_neutral(g: GainGraph) -> GainGraph:
    """Same underlying graph with every gain set to 1."""
    return GainGraph(g.n, [Edge(e.u, e.v, NEUTRAL) for e in g.edges])


_KINDS = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "broom": broom,
    "cone_triangle": cone_triangle,
    "complete": complete,
    "random": random_graph,
}


def generate(kind: str, *args, **kwargs) -> GainGraph:
    """Dispatch on the family name; see the module docstring for labeling."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise GraphError(f"unknown generator kind {kind!r}") from None
    return fn(*args, **kwargs)
