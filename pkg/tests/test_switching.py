from fractions import Fraction

import numpy as np
import pytest

from gaingraph import (
    Gain,
    GraphError,
    apply_switch,
    balance_certificate,
    balanced_component_count,
    build_graph,
    equivalent_to_all_negative,
    gain_of_walk,
    rank_prediction,
    switching_equivalent,
)
from gaingraph.gains import HALF_TURN, NEUTRAL
from gaingraph.generators import (
    all_negative,
    all_neutral,
    complete,
    cycle,
    path,
    random_graph,
    star,
)
I = Gain(Fraction(1, 4))


def rand_zeta(n, seed):
    rng = np.random.default_rng(seed)
    return [Gain(float(t)) for t in rng.random(n)]


class TestApplySwitch:
    def test_identity(self):
        g = random_graph(8, 0.5, 0)
        assert apply_switch(g, [NEUTRAL] * 8) == g

    def test_single_edge(self):
        g = build_graph(2, [(0, 1, Gain(0.1))])
        h = apply_switch(g, [Gain(0.25), Gain(0.05)])
        # zeta(u)^-1 phi zeta(v) = -0.25 + 0.1 + 0.05 turns
        assert h.gain(0, 1).isclose(Gain(0.9), 1e-12)

    def test_group_action(self):
        g = random_graph(10, 0.5, 1)
        z1 = rand_zeta(10, 5)
        z2 = rand_zeta(10, 6)
        once = apply_switch(apply_switch(g, z1), z2)
        combined = apply_switch(g, [a * b for a, b in zip(z1, z2)])
        for e in once.edges:
            assert e.gain.isclose(combined.gain(e.u, e.v), 1e-12)

    def test_inverse_switch_restores(self):
        g = random_graph(10, 0.5, 2)
        z = rand_zeta(10, 7)
        h = apply_switch(apply_switch(g, z), [a.inverse() for a in z])
        for e in h.edges:
            assert e.gain.isclose(g.gain(e.u, e.v), 1e-12)

    def test_preserves_cycle_gains(self):
        g = cycle(5, Gain(0.3))
        h = apply_switch(g, rand_zeta(5, 8))
        assert gain_of_walk(h, [0, 1, 2, 3, 4, 0]).isclose(Gain(0.3), 1e-12)

    def test_length_mismatch(self):
        with pytest.raises(GraphError):
            apply_switch(cycle(3), [NEUTRAL] * 2)


class TestBalanceCertificate:
    def test_neutral_cycle_balanced(self):
        cert = balance_certificate(cycle(4))
        assert cert.balanced
        theta = cert.potential
        g = cycle(4)
        for e in g.edges:
            assert (theta[e.u].inverse() * theta[e.v]).isclose(e.gain, 1e-9)

    def test_trees_always_balanced(self):
        for g in (path(6, [Gain(0.1)] * 5), star(7)):
            assert balance_certificate(g).balanced

    def test_unbalanced_triangle_witness(self):
        g = build_graph(3, [(0, 1, 0), (1, 2, 0), (0, 2, I)])
        cert = balance_certificate(g)
        assert not cert.balanced
        w = cert.witness_cycle
        assert w[0] == w[-1] and len(w) >= 4
        assert gain_of_walk(g, list(w)).isclose(cert.witness_gain, 1e-12)
        assert not cert.witness_gain.is_neutral(1e-9)

    def test_switched_neutral_is_balanced(self):
        g = apply_switch(complete(6), rand_zeta(6, 9))
        cert = balance_certificate(g)
        assert cert.balanced
        # potential recovers every gain, not just the tree ones
        for e in g.edges:
            assert (cert.potential[e.u].inverse() * cert.potential[e.v]).isclose(
                e.gain, 1e-9
            )

    def test_balance_invariant_under_switching(self):
        for seed in range(10):
            g = random_graph(9, 0.5, seed)
            h = apply_switch(g, rand_zeta(9, seed + 100))
            assert balance_certificate(g).balanced == balance_certificate(h).balanced

    def test_cycle_balanced_iff_total_neutral(self):
        assert balance_certificate(cycle(5, NEUTRAL)).balanced
        assert not balance_certificate(cycle(5, Gain(0.2))).balanced
        assert not balance_certificate(cycle(5, HALF_TURN)).balanced


def test_all_cycles_neutral_spot_check():
    # on a small graph, balance must match exhaustive cycle-gain checks
    from itertools import permutations

    g = build_graph(4, [(0, 1, Gain(0.1)), (1, 2, Gain(0.2)), (2, 0, Gain(0.7)),
                        (2, 3, Gain(0.4)), (3, 0, Gain(0.3))])

    def all_cycle_walks(g):
        for k in (3, 4):
            for perm in permutations(range(g.n), k):
                if perm[0] != min(perm):
                    continue
                walk = list(perm) + [perm[0]]
                if all(g.has_edge(walk[i], walk[i + 1]) for i in range(k)):
                    yield walk

    def balanced_by_cycles(g):
        return all(
            gain_of_walk(g, w).is_neutral(1e-9) for w in all_cycle_walks(g)
        )

    assert balance_certificate(g).balanced == balanced_by_cycles(g)
    h = apply_switch(all_neutral(complete(4)), rand_zeta(4, 3))
    assert balance_certificate(h).balanced == balanced_by_cycles(h)
    assert balanced_by_cycles(h)


class TestComponentCounting:
    def test_balanced_components(self):
        # one balanced triangle + one unbalanced triangle + isolated vertex
        g = build_graph(7, [(0, 1, 0), (1, 2, 0), (0, 2, 0),
                            (3, 4, 0), (4, 5, 0), (3, 5, I)])
        assert balanced_component_count(g) == 2  # balanced triangle + isolated
        assert rank_prediction(g) == 5

    def test_all_balanced(self):
        g = build_graph(4, [(0, 1, 0), (2, 3, Gain(0.4))])
        assert balanced_component_count(g) == 2
        assert rank_prediction(g) == 2

    def test_rank_matches_numpy(self):
        from gaingraph.matrices import laplacian

        for seed in range(20):
            g = random_graph(10, 0.4, seed)
            numeric = np.linalg.matrix_rank(laplacian(g), tol=1e-8)
            assert rank_prediction(g) == numeric


class TestSwitchingEquivalent:
    def test_reflexive(self):
        g = random_graph(8, 0.5, 3)
        ok, zeta = switching_equivalent(g, g)
        assert ok
        assert apply_switch(g, zeta) == g or all(
            e.gain.isclose(g.gain(e.u, e.v), 1e-9)
            for e in apply_switch(g, zeta).edges
        )

    def test_recovers_switching_function(self):
        g = random_graph(9, 0.6, 4)
        h = apply_switch(g, rand_zeta(9, 10))
        ok, zeta = switching_equivalent(g, h)
        assert ok
        back = apply_switch(g, zeta)
        for e in back.edges:
            assert e.gain.isclose(h.gain(e.u, e.v), 1e-9)

    def test_symmetric_and_transitive(self):
        g = random_graph(7, 0.6, 5)
        h1 = apply_switch(g, rand_zeta(7, 11))
        h2 = apply_switch(h1, rand_zeta(7, 12))
        assert switching_equivalent(h1, g)[0]
        assert switching_equivalent(g, h2)[0]

    def test_negative(self):
        g = cycle(4, NEUTRAL)
        h = cycle(4, Gain(0.3))
        ok, zeta = switching_equivalent(g, h)
        assert not ok and zeta is None

    def test_different_underlying_rejected(self):
        with pytest.raises(GraphError):
            switching_equivalent(star(4), cycle(4))


class TestAllNegative:
    def test_literal_all_negative(self):
        assert equivalent_to_all_negative(all_negative(cycle(4)))

    def test_switched_all_negative(self):
        g = apply_switch(all_negative(complete(5)), rand_zeta(5, 13))
        assert equivalent_to_all_negative(g)

    def test_odd_neutral_cycle_is_not(self):
        assert not equivalent_to_all_negative(cycle(5))
        # even neutral cycle is switching-equivalent to the all-negative one
        assert equivalent_to_all_negative(cycle(4))

    def test_trees_always(self):
        assert equivalent_to_all_negative(star(6))
        assert equivalent_to_all_negative(path(5, [Gain(0.2)] * 4))
