"""Certified global maximization of phase objectives over [0, 2*pi).

The scheme is grid-then-refine: evaluate on a uniform grid, bracket the
supremum cell by cell, then repeatedly subdivide every cell whose bracket
could still beat the incumbent.  Two sound per-cell brackets are combined:

* Lipschitz: f <= (f(a) + f(b))/2 + L (b-a)/2 on [a, b];
* curvature: when f is a pointwise max of functions with second
  derivative >= -R (true for every objective here, which are maxima of
  sinusoids with amplitude <= L), the maximum principle gives
  f <= chord + R (theta-a)(b-theta)/2, hence max(f(a), f(b)) + R (b-a)^2/8.

The quadratic bracket is what makes flat objectives (disk-shaped
numerical ranges, where f is constant) certifiable at tight tolerances in
a bounded number of evaluations.  The returned certificate bounds the gap
between the reported value and the true supremum and never relies on
unimodality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi


class ToleranceNotReached(RuntimeError):
    """Refinement hit its evaluation cap before certifying the tolerance.

    Carries the best result found so far in ``result`` with an honest
    (larger than requested) certified error.
    """

    def __init__(self, msg: str, result: "SearchResult"):
        super().__init__(msg)
        self.result = result


@dataclass(frozen=True)
class SearchResult:
    value: float
    theta: float
    certified_error: float
    evaluations: int


def _split_factor(n_active: int) -> int:
    # wide splits while few cells survive (fewer refinement waves), binary
    # splits once the active set is large (bounded wave growth)
    if n_active <= 8:
        return 16
    if n_active <= 2048:
        return 4
    return 2


def certified_max(
    f,
    lipschitz: float,
    tol: float,
    init_points: int = 64,
    max_evals: int = 2_000_000,
    curvature: float | None = None,
) -> SearchResult:
    """Maximize a periodic function with a certified bracket.

    Parameters
    ----------
    f : callable
        Vectorized objective: maps an ndarray of angles to an ndarray of
        values.  Must be deterministic.
    lipschitz : float
        A valid Lipschitz constant for `f` on the circle.
    tol : float
        Absolute certification target: stop once sup f <= value + tol.
    init_points : int
        Size of the initial uniform grid.
    max_evals : int
        Hard cap on objective evaluations; exceeding it raises
        :class:`ToleranceNotReached` carrying the best bracket so far.
    curvature : float, optional
        A constant R with f'' >= -R in the max-of-smooth sense described
        in the module docstring; enables the quadratic cell bracket.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    init_points = max(int(init_points), 4)
    L = float(lipschitz)
    R = None if curvature is None else float(curvature)

    theta = np.linspace(0.0, TWO_PI, init_points, endpoint=False)
    fv = np.asarray(f(theta), dtype=float)
    evals = init_points

    # tie-break at the lowest angle: argmax returns the first maximum
    best_idx = int(np.argmax(fv))
    incumbent = float(fv[best_idx])
    best_theta = float(theta[best_idx])

    # wrap-around cells [theta_i, theta_{i+1}]
    a = theta
    b = np.append(theta[1:], TWO_PI)
    fa = fv
    fb = np.append(fv[1:], fv[0])

    # cushion so the certificate survives floating-point noise in f itself
    cushion = 64.0 * np.finfo(float).eps * max(abs(incumbent), L, 1.0)
    pruned_peak = -np.inf

    if L == 0.0:
        return SearchResult(incumbent, best_theta, cushion, evals)

    # amplitudes are also bounded by sup f itself, so the certified global
    # upper bound of the previous wave tightens the curvature constant
    R_dyn = R

    while True:
        width = b - a
        u = 0.5 * (fa + fb) + 0.5 * L * width
        if R_dyn is not None:
            u = np.minimum(u, np.maximum(fa, fb) + 0.125 * R_dyn * width**2)
            upper_now = max(float(u.max()), pruned_peak, 0.0)
            R_dyn = min(R_dyn, upper_now)
        keep = u > incumbent + tol
        if np.any(~keep):
            dropped = u[~keep]
            pruned_peak = max(pruned_peak, float(dropped.max()))
        if not np.any(keep):
            gap = max(0.0, pruned_peak - incumbent)
            return SearchResult(incumbent, best_theta, gap + cushion, evals)
        a, b, fa, fb = a[keep], b[keep], fa[keep], fb[keep]

        if evals >= max_evals:
            gap = max(0.0, max(float(u[keep].max()), pruned_peak) - incumbent)
            raise ToleranceNotReached(
                f"evaluation cap {max_evals} hit with certified error {gap:.3e}",
                SearchResult(incumbent, best_theta, gap + cushion, evals),
            )

        m = _split_factor(a.size)
        frac = np.arange(1, m) / m
        interior = a[:, None] + (b - a)[:, None] * frac[None, :]
        f_new = np.asarray(f(interior.ravel()), dtype=float).reshape(interior.shape)
        evals += interior.size

        wave_max = float(f_new.max())
        if wave_max > incumbent:
            flat = int(np.argmax(f_new.ravel()))
            incumbent = wave_max
            best_theta = float(interior.ravel()[flat])

        # children cells share evaluated endpoints
        pts = np.concatenate([a[:, None], interior, b[:, None]], axis=1)
        vals = np.concatenate([fa[:, None], f_new, fb[:, None]], axis=1)
        a = pts[:, :-1].ravel()
        b = pts[:, 1:].ravel()
        fa = vals[:, :-1].ravel()
        fb = vals[:, 1:].ravel()
