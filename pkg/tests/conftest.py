"""Shared fixtures: seeded graph ensembles reused across test modules."""
import numpy as np
import pytest

from gaingraph import Gain, GainGraph, apply_switch, random_graph
from gaingraph.gains import HALF_TURN, NEUTRAL
from gaingraph.graph import Edge

ENSEMBLE_SEED = 20240

#: one line per release criterion, filled by test_acceptance.py
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.write_sep("-", "acceptance gate")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


def random_switch(g: GainGraph, rng) -> GainGraph:
    zeta = [Gain(float(t)) for t in rng.random(g.n)]
    return apply_switch(g, zeta)


def with_gains(g: GainGraph, gains) -> GainGraph:
    return GainGraph(g.n, [Edge(e.u, e.v, x) for e, x in zip(g.edges, gains)])


def make_instance(s: int, nmax: int = 32, connected: bool = False) -> GainGraph:
    """One mixed-construction instance: random, balanced, all-negative-class
    or signed gains, on a G(n, p) underlying graph."""
    rng = np.random.default_rng(ENSEMBLE_SEED + s)
    n = int(rng.integers(3, nmax + 1))
    p = (0.2, 0.5, 0.8)[s % 3]
    g = random_graph(n, p, seed=ENSEMBLE_SEED + s)
    if connected:
        edges = list(g.edges)
        present = {(e.u, e.v) for e in edges}
        for i in range(n - 1):
            if (i, i + 1) not in present:
                edges.append(Edge(i, i + 1, Gain(float(rng.random()))))
        g = GainGraph(n, edges)
    mode = s % 4
    if mode == 1:  # balanced: switched all-neutral
        g = random_switch(with_gains(g, [NEUTRAL] * g.m), rng)
    elif mode == 2:  # switching class of (Gamma, -1)
        g = random_switch(with_gains(g, [HALF_TURN] * g.m), rng)
    elif mode == 3:  # signed graph
        signs = [HALF_TURN if b else NEUTRAL for b in rng.random(g.m) < 0.5]
        g = with_gains(g, signs)
    return g


@pytest.fixture(scope="session")
def mixed_ensemble():
    """500 mixed instances, disconnected ones included."""
    return [make_instance(s) for s in range(500)]


@pytest.fixture(scope="session")
def connected_ensemble():
    """500 mixed connected instances."""
    return [make_instance(s, connected=True) for s in range(500)]
