"""Numerical radius and weighted quantities.

The numerical radius is computed as a certified global maximum over the
phase:  w(T) = sup_theta lambda_max(H(theta)) with
H(theta) = (e^{i theta} T + e^{-i theta} T*) / 2
        = cos(theta) Re(T) - sin(theta) Im(T),
for which ||T|| is a Lipschitz constant in theta.  The weighted radius
w_t(T) is w((1-2t) T* + T) and the weighted norm is the operator norm of
the same combination; both reduce to the classical quantities at t = 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import abs_op, adjoint, as_operator, polar, psd_power, spectral_norm
from .search import SearchResult, certified_max


@dataclass(frozen=True)
class RadiusResult:
    """A radius estimate with the phase that attained it and a certified
    upper bound on |true - value|."""

    value: float
    theta_star: float
    certified_error: float
    evaluations: int = 0


def check_weight(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"weight t must lie in [0, 1], got {t}")
    return t


def weighted_real_part(T, t: float) -> np.ndarray:
    """Weighted real part (1-t) T* + t T; the classical Re(T) at t = 1/2."""
    M = as_operator(T)
    t = check_weight(t)
    return (1.0 - t) * adjoint(M) + t * M


def weighted_imag_part(T, t: float) -> np.ndarray:
    """Weighted imaginary part ((1-t) T - t T*) / i; classical Im(T) at t = 1/2."""
    M = as_operator(T)
    t = check_weight(t)
    return ((1.0 - t) * M - t * adjoint(M)) / 1j


def weighted_combination(T, t: float) -> np.ndarray:
    """(1-2t) T* + T, the operator whose classical radius/norm defines
    the weighted ones.  Equals Re_t(T) + i Im_t(T)."""
    M = as_operator(T)
    t = check_weight(t)
    return (1.0 - 2.0 * t) * adjoint(M) + M


def default_tolerance(T) -> float:
    """Engine default: 1e-10 relative to max(||T||, 1)."""
    return 1e-10 * max(spectral_norm(T), 1.0)


def _grid_points(n: int) -> int:
    return max(64, 16 * n)


def numerical_radius(T, tol: float | None = None, max_evals: int = 200_000) -> RadiusResult:
    """Numerical radius w(T) with a certified global phase search.

    `tol` is the absolute certification target; when omitted it defaults to
    ``1e-10 * max(||T||, 1)``.  Raises
    :class:`~wnr.search.ToleranceNotReached` if the evaluation cap is hit
    first (the exception carries the best bracket found).
    """
    M = as_operator(T)
    n = M.shape[0]
    nrm = spectral_norm(M)
    if nrm == 0.0:
        return RadiusResult(0.0, 0.0, 0.0, 0)
    if tol is None:
        tol = 1e-10 * max(nrm, 1.0)

    re = (M + adjoint(M)) / 2
    im = (M - adjoint(M)) / 2j

    if n == 1:
        a, b = float(re[0, 0].real), float(im[0, 0].real)

        def lam_max(thetas: np.ndarray) -> np.ndarray:
            return np.cos(thetas) * a - np.sin(thetas) * b

    elif n == 2:
        # closed-form top eigenvalue of the 2x2 Hermitian pencil; far
        # cheaper than batched LAPACK on the hot path
        a11, a22, a12 = float(re[0, 0].real), float(re[1, 1].real), complex(re[0, 1])
        b11, b22, b12 = float(im[0, 0].real), float(im[1, 1].real), complex(im[0, 1])

        def lam_max(thetas: np.ndarray) -> np.ndarray:
            c, s = np.cos(thetas), np.sin(thetas)
            mean = 0.5 * ((a11 + a22) * c - (b11 + b22) * s)
            half = 0.5 * ((a11 - a22) * c - (b11 - b22) * s)
            off = a12 * c - b12 * s
            return mean + np.sqrt(half**2 + off.real**2 + off.imag**2)

    else:

        def lam_max(thetas: np.ndarray) -> np.ndarray:
            H = (
                np.cos(thetas)[:, None, None] * re
                - np.sin(thetas)[:, None, None] * im
            )
            return np.linalg.eigvalsh(H)[..., -1]

    # lam_max is a pointwise max of sinusoids <H(theta) x, x> with amplitude
    # |<Tx, x>| <= ||T||, so ||T|| is valid both as Lipschitz constant and
    # as the curvature constant of the quadratic cell bracket
    res: SearchResult = certified_max(
        lam_max,
        lipschitz=nrm,
        tol=tol,
        init_points=_grid_points(n),
        max_evals=max_evals,
        curvature=nrm,
    )
    return RadiusResult(res.value, res.theta, res.certified_error, res.evaluations)


def weighted_numerical_radius(
    T, t: float, tol: float | None = None, max_evals: int = 200_000
) -> RadiusResult:
    """Weighted numerical radius w_t(T) = w((1-2t) T* + T)."""
    return numerical_radius(weighted_combination(T, t), tol=tol, max_evals=max_evals)


def weighted_norm(T, t: float) -> float:
    """Weighted operator norm ||(1-2t) T* + T||."""
    return spectral_norm(weighted_combination(T, t))


def aluthge(T) -> np.ndarray:
    """Aluthge transform |T|^(1/2) U |T|^(1/2) from the polar factors of T."""
    parts = polar(T)
    root = psd_power(parts.modulus, 0.5)
    return root @ parts.isometry @ root


@dataclass(frozen=True)
class DefinitionsGap:
    """Both published forms of the weighted radius on one input.

    `operative` is w((1-2t) T* + T) (the definition every theorem here is
    consistent with); `sup_form` is sup_theta ||(1-t) e^{-i theta} T* +
    t e^{i theta} T||.  The two disagree already on scalars for t != 1/2;
    `gap` reports their difference without guessing which one the cited
    source intended.
    """

    operative: float
    sup_form: float
    gap: float


def weighted_radius_definitions_gap(T, t: float, tol: float | None = None) -> DefinitionsGap:
    """Diagnostic comparing the two published definitions of w_t."""
    M = as_operator(T)
    t = check_weight(t)
    operative = weighted_numerical_radius(M, t, tol=tol).value

    nrm = spectral_norm(M)
    if nrm == 0.0:
        return DefinitionsGap(operative, 0.0, operative)
    if tol is None:
        tol = 1e-10 * max(nrm, 1.0)
    Mstar = adjoint(M)

    def norm_of_combo(thetas: np.ndarray) -> np.ndarray:
        phases = np.exp(1j * thetas)
        batch = (1.0 - t) * np.conj(phases)[:, None, None] * Mstar + t * phases[
            :, None, None
        ] * M
        return np.linalg.svd(batch, compute_uv=False)[..., 0]

    res = certified_max(
        norm_of_combo,
        lipschitz=nrm,
        tol=tol,
        init_points=_grid_points(M.shape[0]),
        curvature=nrm,
    )
    return DefinitionsGap(operative, res.value, operative - res.value)
