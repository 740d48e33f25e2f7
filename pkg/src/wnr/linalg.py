"""Dense complex-matrix building blocks: adjoints, Hermitian eigensolving,
SVD, PSD spectral calculus and the polar decomposition.

All matrices are square ``numpy.ndarray`` of ``complex128``; every function
is pure and never mutates its arguments.  Tolerances are relative to the
scale of the input so tiny and huge operators behave the same.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NotSquare(ValueError):
    """Raised when an operator-role matrix is not square."""


class NotHermitian(ValueError):
    """Raised when a matrix is asymmetric beyond tolerance."""


class NotPSD(ValueError):
    """Raised when a matrix has an eigenvalue below the PSD clamp window."""


def as_operator(A) -> np.ndarray:
    """Validate and return `A` as a square complex matrix with finite entries."""
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M.view(float))):
        raise ValueError("matrix entries must be finite")
    return M


def adjoint(A: np.ndarray) -> np.ndarray:
    """Conjugate transpose A*."""
    return np.conj(np.asarray(A, dtype=complex).T)


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """Hilbert-space inner product <u, v>, linear in `u`, conjugate-linear in `v`."""
    return complex(np.vdot(v, u))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (real, descending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class PolarParts:
    """Polar factors T = isometry @ modulus with Ker T = Ker isometry."""

    isometry: np.ndarray
    modulus: np.ndarray


def hermitian_eigen(A, herm_tol: float = 1e-10) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    The input must be Hermitian within ``herm_tol * ||A||_F``; it is
    symmetrized as (A + A*)/2 before solving.  Eigenvalues come back in
    descending order and each eigenvector is phase-fixed so its first
    nonnegligible component is real and nonnegative, making the output
    reproducible across runs.
    """
    M = as_operator(A)
    scale = float(np.linalg.norm(M))
    defect = float(np.linalg.norm(M - adjoint(M)))
    if defect > herm_tol * max(scale, 1e-300):
        raise NotHermitian(
            f"asymmetry {defect:.3e} exceeds {herm_tol:.1e} * ||A|| = {herm_tol * scale:.3e}"
        )
    H = (M + adjoint(M)) / 2
    vals, vecs = np.linalg.eigh(H)
    vals = vals[::-1].copy()
    vecs = vecs[:, ::-1].copy()
    # fixed phase convention: first component with |v_i| > 1e-12 * max|v| made real >= 0
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        mags = np.abs(col)
        idx = np.argmax(mags > 1e-12 * mags.max()) if mags.max() > 0 else 0
        pivot = col[idx]
        if abs(pivot) > 0:
            vecs[:, j] = col * (np.conj(pivot) / abs(pivot))
    return SpectralDecomposition(eigenvalues=vals, eigenvectors=vecs)


def svd(A) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition A = U diag(s) V* with s descending.

    Returns (U, s, V); note V, not V*, to match A = U @ diag(s) @ V.conj().T.
    """
    M = np.asarray(A, dtype=complex)
    U, s, Vh = np.linalg.svd(M)
    return U, s, adjoint(Vh)


def spectral_norm(A) -> float:
    """Operator norm: the largest singular value."""
    M = np.asarray(A, dtype=complex)
    if M.size == 0:
        return 0.0
    return float(np.linalg.svd(M, compute_uv=False)[0])


def psd_power(A, p: float, clamp_tol: float = 1e-10) -> np.ndarray:
    """Spectral power A^p of a Hermitian PSD matrix, with the convention 0^0 = 1.

    Eigenvalues in [-clamp_tol * lambda_max, 0) are rounding noise and get
    clamped to zero; anything more negative raises :class:`NotPSD`.
    ``p = 0`` returns the identity (so |T|^0 = I at the alpha endpoints of
    the mixed Schwarz inequality).
    """
    if p < 0:
        raise ValueError("power must be nonnegative")
    dec = hermitian_eigen(A)
    lam = dec.eigenvalues
    lam_max = max(float(lam[0]), 0.0)
    floor = -clamp_tol * lam_max
    if np.any(lam < floor - 1e-300):
        raise NotPSD(
            f"eigenvalue {lam.min():.3e} below PSD clamp window {floor:.3e}"
        )
    if p == 0:
        return np.eye(dec.eigenvectors.shape[0], dtype=complex)
    lam = np.maximum(lam, 0.0)
    V = dec.eigenvectors
    return (V * lam**p) @ adjoint(V)


def abs_op(T) -> np.ndarray:
    """Operator modulus |T| = (T*T)^(1/2)."""
    M = as_operator(T)
    return psd_power(adjoint(M) @ M, 0.5)


def polar(T, rank_tol: float | None = None) -> PolarParts:
    """Canonical polar decomposition T = U |T| with Ker T = Ker U.

    Built from the SVD T = V S W*: modulus = W S W* and the partial isometry
    U = V 1(S > rank_tol) W*, so U*U is the orthogonal projection onto
    range(|T|).  Default rank_tol = 1e-12 * sigma_max * n.
    """
    M = as_operator(T)
    V, s, W = svd(M)
    n = M.shape[0]
    if rank_tol is None:
        rank_tol = 1e-12 * (float(s[0]) if s.size else 0.0) * n
    if rank_tol <= 0:
        rank_tol = 1e-300
    modulus = (W * s) @ adjoint(W)
    support = (s > rank_tol).astype(float)
    isometry = (V * support) @ adjoint(W)
    return PolarParts(isometry=isometry, modulus=modulus)
