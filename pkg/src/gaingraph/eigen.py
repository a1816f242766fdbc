"""Self-contained complex Hermitian eigensolver.

M = X + iY is embedded in the 2n x 2n real symmetric block matrix
[[X, -Y], [Y, X]], which is diagonalized by cyclic Jacobi sweeps.  The
embedding doubles every eigenvalue; the solver sorts descending, asserts
the pair structure, and keeps every second value.  Complex eigenvectors
are recovered from the embedding columns (first n rows + i * last n rows)
and re-orthonormalized, which keeps degenerate eigenspaces unitary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

#: default relative off-diagonal convergence threshold
OFF_TOL = 1e-13
#: hard cap on Jacobi sweeps
MAX_SWEEPS = 100
#: relative residual acceptance threshold
RESIDUAL_TOL = 1e-8
#: relative pair-gap tolerance for the doubled embedding spectrum
PAIR_TOL = 1e-9


class ConvergenceError(RuntimeError):
    """Jacobi sweeps did not reach the off-diagonal threshold."""


class PairingError(RuntimeError):
    """Embedding eigenvalues did not match up in pairs."""


@dataclass
class Spectrum:
    """Real eigenvalues sorted descending, with eigenpair residuals.

    ``eigenvalues[0]`` is lambda_1.  ``eigenvectors``, when present, has
    the eigenvector of ``eigenvalues[k]`` in column k and is unitary up
    to the residual tolerance.  Degenerate eigenvalues appear as repeated
    entries; no multiplicity merging.
    """

    eigenvalues: np.ndarray
    residual: float
    eigenvectors: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def lam(self, k: int) -> float:
        """lambda_k in the descending convention (1-indexed)."""
        return float(self.eigenvalues[k - 1])


@njit(cache=True)
def _jacobi(A, V, off_target, max_sweeps):  # pragma: no cover - jitted
    N = A.shape[0]
    off = 0.0
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(N):
            for j in range(i + 1, N):
                off += A[i, j] * A[i, j]
        off = math.sqrt(2.0 * off)
        if off <= off_target:
            return off
        for p in range(N - 1):
            for q in range(p + 1, N):
                apq = A[p, q]
                if abs(apq) == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    continue  # rotation would be numerically an identity
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(N):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * akq
                    A[k, q] = s * akp + c * akq
                for k in range(N):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * aqk
                    A[q, k] = s * apk + c * aqk
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(N):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
    off = 0.0
    for i in range(N):
        for j in range(i + 1, N):
            off += A[i, j] * A[i, j]
    return -math.sqrt(2.0 * off)  # negative signals non-convergence


def _embed(M: np.ndarray) -> np.ndarray:
    X = M.real.copy()
    Y = M.imag.copy()
    X = 0.5 * (X + X.T)
    Y = 0.5 * (Y - Y.T)
    return np.block([[X, -Y], [Y, X]])


def _orthonormal_pick(cands: np.ndarray, k: int) -> np.ndarray:
    """Pick k orthonormal columns from a set spanning a k-dim space."""
    picked = []
    for col in cands.T:
        w = col.copy()
        for b in picked:
            w -= b * np.vdot(b, w)
        nw = np.linalg.norm(w)
        if nw > 1e-6:
            picked.append(w / nw)
            if len(picked) == k:
                break
    if len(picked) < k:
        raise PairingError("could not recover a full set of eigenvectors")
    return np.column_stack(picked)


def eigen_hermitian(
    M: np.ndarray,
    *,
    off_tol: float = OFF_TOL,
    max_sweeps: int = MAX_SWEEPS,
    residual_tol: float = RESIDUAL_TOL,
    want_vectors: bool = True,
) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix via the real embedding."""
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return Spectrum(np.zeros(0), 0.0, np.zeros((0, 0), dtype=complex))
    fro = float(np.linalg.norm(M))
    herm_dev = float(np.abs(M - M.conj().T).max())
    if herm_dev > 1e-10 * (1.0 + fro):
        raise ValueError(f"matrix is not Hermitian (deviation {herm_dev:.3e})")

    B = _embed(M)
    V = np.eye(2 * n)
    off = _jacobi(B, V, off_tol * math.sqrt(2.0) * fro, max_sweeps)
    if off < 0.0:
        raise ConvergenceError(
            f"no convergence in {max_sweeps} sweeps (off-diagonal norm {-off:.3e})"
        )

    w = np.diag(B).copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    scale = 1.0 + fro
    gaps = w[0::2] - w[1::2]
    if gaps.size and float(gaps.max()) > PAIR_TOL * scale:
        raise PairingError(
            f"embedding eigenvalues not paired (worst gap {float(gaps.max()):.3e})"
        )
    eigs = w[0::2].copy()

    vectors = None
    residual = 0.0
    if want_vectors:
        Vs = V[:, order]
        cand = Vs[:n, :] + 1j * Vs[n:, :]
        # cluster indices of equal (to pairing tolerance) eigenvalues
        vectors = np.zeros((n, n), dtype=np.complex128)
        i = 0
        while i < n:
            j = i + 1
            while j < n and eigs[i] - eigs[j] <= PAIR_TOL * scale:
                j += 1
            k = j - i
            vectors[:, i:j] = _orthonormal_pick(cand[:, 2 * i : 2 * j], k)
            i = j
        # global polish: exact unitarity, negligible residual cost
        for col in range(n):
            v = vectors[:, col]
            for prev in range(col):
                v -= vectors[:, prev] * np.vdot(vectors[:, prev], v)
            vectors[:, col] = v / np.linalg.norm(v)
        R = M @ vectors - vectors * eigs[None, :]
        residual = float(np.linalg.norm(R, axis=0).max())
        if residual > residual_tol * scale:
            raise ConvergenceError(
                f"residual {residual:.3e} exceeds {residual_tol:.1e}*(1+||M||_F)"
            )
    tr_dev = abs(eigs.sum() - float(np.trace(M).real))
    if tr_dev > 1e-8 * scale:
        raise ConvergenceError(f"trace mismatch {tr_dev:.3e}")
    return Spectrum(eigs, residual, vectors)
