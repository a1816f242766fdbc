"""Spectral utilities and closed-form spectra.

The moment closed forms come in two variants.  The "printed" variant
evaluates squares and products of (possibly complex) net degrees
literally, taking the real part at the end.  The "corrected" variant
replaces plain transposes by conjugate transposes, which is the quantity
the Rayleigh bracket actually bounds; the two agree whenever every net
degree is real.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .eigen import Spectrum, eigen_hermitian
from .gains import Gain, as_gain
from .graph import GainGraph, degree_profile
from .matrices import adjacency, laplacian


def spectral_radius(s: Spectrum) -> float:
    if s.n == 0:
        raise ValueError("empty spectrum")
    return max(abs(s.lam(1)), abs(s.lam(s.n)))


def rayleigh_quotient(M: np.ndarray, x: Sequence[complex]) -> float:
    M = np.asarray(M, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    nx2 = float(np.vdot(x, x).real)
    if nx2 == 0.0:
        raise ValueError("zero vector")
    q = complex(np.vdot(x, M @ x)) / nx2
    scale = 1e-10 * (1.0 + float(np.linalg.norm(M)) * nx2)
    if abs(q.imag) > scale:
        raise ValueError(f"Rayleigh quotient has imaginary residue {q.imag:.3e}")
    return q.real


def moment(M: np.ndarray, k: int) -> float:
    """j* M^k j for k in {1,2,3}, via repeated matrix-vector products."""
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[0]
    j = np.ones(n, dtype=np.complex128)
    w1 = M @ j
    if k == 1:
        val = complex(np.vdot(j, w1))
    elif k == 2:
        val = complex(np.vdot(w1, w1))
    elif k == 3:
        val = complex(np.vdot(w1, M @ w1))
    else:
        raise ValueError("moment order must be 1, 2 or 3")
    if abs(val.imag) > 1e-9 * (1.0 + abs(val)):
        raise ValueError(f"moment has imaginary residue {val.imag:.3e}")
    return val.real


@dataclass(frozen=True)
class MomentValue:
    printed: float
    corrected: float


@dataclass(frozen=True)
class ClosedFormMoments:
    """Closed-form adjacency moments M1..M3 and Laplacian moments N1..N3."""

    m1: MomentValue
    m2: MomentValue
    m3: MomentValue
    n1: MomentValue
    n2: MomentValue
    n3: MomentValue


def closed_form_moments(g: GainGraph) -> ClosedFormMoments:
    prof = degree_profile(g)
    d = prof.d.astype(np.float64)
    net = prof.net
    w = d - net  # row sums of the Laplacian

    m1 = net.sum()
    m2_printed = (net**2).sum()
    m2_corrected = (np.abs(net) ** 2).sum()
    m3_printed = 0.0 + 0.0j
    m3_corrected = 0.0
    n3_edge_printed = 0.0 + 0.0j
    n3_edge_corrected = 0.0
    for e in g.edges:
        phi = e.gain.value
        m3_printed += phi.real * net[e.u] * net[e.v]
        m3_corrected += (phi * np.conj(net[e.u]) * net[e.v]).real
        n3_edge_printed += phi.real * w[e.u] * w[e.v]
        n3_edge_corrected += (phi * np.conj(w[e.u]) * w[e.v]).real

    n1 = w.sum()
    n2_printed = (d**2).sum() - 2.0 * (net * d).sum() + (net**2).sum()
    n2_corrected = (np.abs(w) ** 2).sum()
    n3_printed = (d * w**2).sum() - 2.0 * n3_edge_printed
    n3_corrected = float((d * np.abs(w) ** 2).sum()) - 2.0 * n3_edge_corrected

    return ClosedFormMoments(
        m1=MomentValue(m1.real, m1.real),
        m2=MomentValue(complex(m2_printed).real, float(m2_corrected)),
        m3=MomentValue(2.0 * complex(m3_printed).real, 2.0 * m3_corrected),
        n1=MomentValue(complex(n1).real, complex(n1).real),
        n2=MomentValue(complex(n2_printed).real, float(n2_corrected)),
        n3=MomentValue(complex(n3_printed).real, n3_corrected),
    )


# -- closed-form spectra ---------------------------------------------------

@dataclass(frozen=True)
class FamilySpectra:
    adjacency: np.ndarray
    laplacian: np.ndarray


def cycle_spectrum(n: int, total=Gain()) -> FamilySpectra:
    """Closed-form spectra of a gain cycle with total gain e^(i*theta)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    t = float(as_gain(total).turns)
    adj = np.array(
        [2.0 * math.cos(2.0 * math.pi * (t + j) / n) for j in range(n)]
    )
    adj = np.sort(adj)[::-1]
    lap = np.sort(2.0 - adj)[::-1]
    return FamilySpectra(adjacency=adj, laplacian=lap)


def path_spectrum(n: int) -> FamilySpectra:
    """Spectra of any gain path (all gain paths are balanced)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    adj = np.array([2.0 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1)])
    lap = np.array([2.0 - 2.0 * math.cos(k * math.pi / n) for k in range(n)])
    return FamilySpectra(adjacency=np.sort(adj)[::-1], laplacian=np.sort(lap)[::-1])


def char_poly_eval(s: Union[Spectrum, np.ndarray], t: float) -> float:
    """Evaluate the characteristic polynomial prod(t - lambda_i)."""
    eigs = s.eigenvalues if isinstance(s, Spectrum) else np.asarray(s)
    return float(np.prod(t - eigs))


# -- convenience ----------------------------------------------------------

def adjacency_spectrum(g: GainGraph, **kw) -> Spectrum:
    return eigen_hermitian(adjacency(g), **kw)


def laplacian_spectrum(g: GainGraph, **kw) -> Spectrum:
    return eigen_hermitian(laplacian(g), **kw)
