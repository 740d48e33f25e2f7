"""2x2 block operator matrices and closed-form weighted-radius routes.

Each `wt_*` function evaluates one closed-form identity for the weighted
radius of a structured block matrix and cross-checks it against the direct
computation on the assembled 2n x 2n matrix.  A disagreement beyond the
route tolerance signals an engine bug and raises :class:`RouteMismatch`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import adjoint, as_operator, spectral_norm
from .radius import check_weight, weighted_numerical_radius
from .search import certified_max

ROUTE_TOL = 1e-6


class RouteMismatch(RuntimeError):
    """Closed-form and direct block evaluations disagree beyond tolerance."""


@dataclass(frozen=True)
class Block2x2:
    """Blocks of [[X, Y], [Z, W]]; all four must share one square shape."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        mats = [as_operator(m) for m in (self.x, self.y, self.z, self.w)]
        n = mats[0].shape[0]
        if any(m.shape[0] != n for m in mats):
            raise ValueError("all four blocks must share one dimension")
        object.__setattr__(self, "x", mats[0])
        object.__setattr__(self, "y", mats[1])
        object.__setattr__(self, "z", mats[2])
        object.__setattr__(self, "w", mats[3])


def assemble(b: Block2x2) -> np.ndarray:
    """The 2n x 2n matrix [[X, Y], [Z, W]]."""
    return np.block([[b.x, b.y], [b.z, b.w]])


def split(M, n: int) -> Block2x2:
    """Inverse of :func:`assemble` for a 2n x 2n matrix."""
    M = as_operator(M)
    if M.shape[0] != 2 * n:
        raise ValueError(f"expected a {2 * n} x {2 * n} matrix, got {M.shape}")
    return Block2x2(M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:])


def _check_routes(closed: float, direct: float, name: str, route_tol: float) -> None:
    scale = max(abs(closed), abs(direct), 1.0)
    if abs(closed - direct) > route_tol * scale:
        raise RouteMismatch(
            f"{name}: closed form {closed!r} vs direct {direct!r} "
            f"differ beyond {route_tol:.1e} * {scale:.3e}"
        )


def wt_diag(X, Y, t: float, route_tol: float = ROUTE_TOL) -> float:
    """w_t of [[X, 0], [0, Y]] = max(w_t(X), w_t(Y)), checked directly."""
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    Z = np.zeros_like(X)
    closed = max(
        weighted_numerical_radius(X, t).value, weighted_numerical_radius(Y, t).value
    )
    direct = weighted_numerical_radius(assemble(Block2x2(X, Z, Z, Y)), t).value
    _check_routes(closed, direct, "wt_diag", route_tol)
    return closed


def wt_offdiag_sym(X, t: float, route_tol: float = ROUTE_TOL) -> float:
    """w_t of [[0, X], [X, 0]] = w_t(X), checked directly."""
    X = as_operator(X)
    t = check_weight(t)
    Z = np.zeros_like(X)
    closed = weighted_numerical_radius(X, t).value
    direct = weighted_numerical_radius(assemble(Block2x2(Z, X, X, Z)), t).value
    _check_routes(closed, direct, "wt_offdiag_sym", route_tol)
    return closed


def wt_circulant(X, Y, t: float, route_tol: float = ROUTE_TOL) -> float:
    """w_t of [[X, Y], [Y, X]] = max(w_t(X+Y), w_t(X-Y)), checked directly.

    The closed form is the unitary conjugation by the Hadamard-type block
    unitary that diagonalizes the circulant structure.
    """
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    closed = max(
        weighted_numerical_radius(X + Y, t).value,
        weighted_numerical_radius(X - Y, t).value,
    )
    direct = weighted_numerical_radius(assemble(Block2x2(X, Y, Y, X)), t).value
    _check_routes(closed, direct, "wt_circulant", route_tol)
    return closed


def antidiag_sup(X, Y, t: float, tol: float | None = None, theta_grid: int | None = None) -> float:
    """sup over theta of (1/2) ||(1-2t)(e^{-i th} X + e^{i th} Y*) + (e^{i th} X + e^{-i th} Y*)||.

    Grouping by phase, the combination equals e^{i th} C1 + e^{-i th} C2
    with C1 = X + (1-2t) Y* and C2 = (1-2t) X + Y*, which gives the valid
    Lipschitz constant (||C1|| + ||C2||) / 2 for the half-norm on every
    t in [0, 1].
    """
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    c = 1.0 - 2.0 * t
    C1 = X + c * adjoint(Y)
    C2 = c * X + adjoint(Y)
    lipschitz = 0.5 * (spectral_norm(C1) + spectral_norm(C2))
    if lipschitz == 0.0:
        return 0.0
    if tol is None:
        tol = 1e-10 * max(lipschitz, 1.0)
    if theta_grid is None:
        theta_grid = max(64, 16 * X.shape[0])

    def half_norm(thetas: np.ndarray) -> np.ndarray:
        phases = np.exp(1j * thetas)[:, None, None]
        batch = phases * C1 + np.conj(phases) * C2
        return 0.5 * np.linalg.svd(batch, compute_uv=False)[..., 0]

    # the half-norm is a pointwise max of sinusoids Re(e^{i th} <C1 x, y> +
    # e^{-i th} <C2 x, y>)/2 with amplitude <= (||C1|| + ||C2||)/2, so the
    # same constant serves as Lipschitz and curvature bound
    return certified_max(
        half_norm,
        lipschitz=lipschitz,
        tol=tol,
        init_points=theta_grid,
        curvature=lipschitz,
    ).value


def wt_antidiag(
    X, Y, t: float, theta_grid: int | None = None, route_tol: float = ROUTE_TOL
) -> float:
    """w_t of [[0, X], [Y, 0]] via the phase supremum, checked directly."""
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    Z = np.zeros_like(X)
    closed = antidiag_sup(X, Y, t, theta_grid=theta_grid)
    direct = weighted_numerical_radius(assemble(Block2x2(Z, X, Y, Z)), t).value
    _check_routes(closed, direct, "wt_antidiag", route_tol)
    return closed
