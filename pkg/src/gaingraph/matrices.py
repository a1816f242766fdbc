"""Matrices attached to a gain graph.

All matrices are dense complex ndarrays; target sizes are desk-scale.
Adjacency and Laplacian are Hermitian by construction (one stored gain
per edge, conjugate written to the mirror entry).
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .gains import Gain
from .generators import all_negative
from .graph import GainGraph


def adjacency(g: GainGraph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.complex128)
    for e in g.edges:
        z = e.gain.value
        A[e.u, e.v] = z
        A[e.v, e.u] = np.conj(z)
    return A


def degree_matrix(g: GainGraph) -> np.ndarray:
    D = np.zeros((g.n, g.n), dtype=np.complex128)
    for e in g.edges:
        D[e.u, e.u] += 1
        D[e.v, e.v] += 1
    return D


def laplacian(g: GainGraph) -> np.ndarray:
    L = degree_matrix(g)
    for e in g.edges:
        z = e.gain.value
        L[e.u, e.v] = -z
        L[e.v, e.u] = -np.conj(z)
    return L


def signless_laplacian(g: GainGraph) -> np.ndarray:
    """Q of the underlying graph, built as the Laplacian of (Gamma, -1)."""
    return laplacian(all_negative(g))


def incidence(g: GainGraph) -> np.ndarray:
    """n x m incidence matrix, columns in edge insertion order.

    Convention: for the stored edge u -> v the column has entry 1 at v
    and -phi(u -> v) at u.  Any column can be rescaled by a unit complex
    without changing the Gram product.
    """
    H = np.zeros((g.n, g.m), dtype=np.complex128)
    for col, e in enumerate(g.edges):
        H[e.v, col] = 1.0
        H[e.u, col] = -e.gain.value
    return H


def gram_check(g: GainGraph) -> float:
    """Max entry-wise deviation of H H* from the Laplacian."""
    H = incidence(g)
    L = laplacian(g)
    return float(np.abs(H @ H.conj().T - L).max()) if g.n else 0.0


def quadratic_form(g: GainGraph, x: Sequence[complex]) -> float:
    """Sum over edges of |x_u - phi(u->v) x_v|^2."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    if not g.edges:
        return 0.0
    us = np.array([e.u for e in g.edges])
    vs = np.array([e.v for e in g.edges])
    phis = np.array([e.gain.value for e in g.edges])
    return float((np.abs(x[us] - phis * x[vs]) ** 2).sum())


def switching_matrix(zeta: Sequence[Gain]) -> np.ndarray:
    return np.diag([z.value for z in zeta])


def conjugate_by_switch(M: np.ndarray, zeta: Sequence[Gain]) -> np.ndarray:
    """D(zeta)* M D(zeta) for a diagonal unit matrix D(zeta)."""
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (len(zeta), len(zeta)):
        raise ValueError("switching function length does not match matrix size")
    z = np.array([w.value for w in zeta])
    return (np.conj(z)[:, None] * M) * z[None, :]


def hermitian_deviation(M: np.ndarray) -> float:
    M = np.asarray(M)
    return float(np.abs(M - M.conj().T).max()) if M.size else 0.0
