"""Declarative registry of weighted numerical-radius bounds.

Every entry evaluates a left-hand side, a right-hand side and the margin
rhs - lhs on concrete inputs.  Nonnegative margin (up to tolerance)
certifies the bound on that instance.  Identity entries report the
deviation |lhs - rhs| as a negated margin against rhs = 0, so a violation
threshold applies uniformly.

Most operator bounds carry coefficients like (1-2t) whose nonnegativity
the derivations rely on; their default validity domain in t is [0, 1/2]
and evaluations beyond it are probe-mode findings, not failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blocks import Block2x2, antidiag_sup, assemble
from .linalg import abs_op, adjoint, as_operator, inner, psd_power, spectral_norm
from .radius import (
    aluthge,
    check_weight,
    numerical_radius,
    weighted_combination,
    weighted_norm,
    weighted_numerical_radius,
)

TIGHT_TOL = 1e-7


class UnknownBound(KeyError):
    """Raised when a bound id is not present in the registry."""


@dataclass(frozen=True)
class BoundResult:
    """One evaluation of a registered bound."""

    id: str
    lhs: float
    rhs: float
    margin: float
    params: dict = field(default_factory=dict)
    tight: bool = False

    @property
    def scale(self) -> float:
        return max(abs(self.lhs), abs(self.rhs), 1.0)


def _result(bound_id: str, lhs: float, rhs: float, params: dict) -> BoundResult:
    lhs, rhs = float(lhs), float(rhs)
    margin = rhs - lhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return BoundResult(
        id=bound_id,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        params=params,
        tight=abs(margin) <= TIGHT_TOL * scale,
    )


def _identity_result(bound_id: str, deviation: float, params: dict) -> BoundResult:
    # identities are encoded as deviation <= 0-margin so sweeps can treat
    # all entries uniformly
    return _result(bound_id, float(deviation), 0.0, params)


class EvalContext:
    """Memoizing access to the radius engine for one instance.

    Caches every numerical-radius / norm computation by matrix content, so
    sweeping a t or alpha grid over one instance re-pays only the pieces
    that actually depend on the parameter.  Also accumulates engine
    statistics for reports.
    """

    # 1e-9 keeps two orders of slack under the 1e-7 margin tolerance while
    # making flat-boundary instances (disk numerical ranges) much cheaper
    def __init__(self, tol_rel: float = 1e-9, max_evals: int = 2_000_000):
        self.tol_rel = tol_rel
        self.max_evals = max_evals
        self._memo: dict = {}
        self.radius_calls = 0
        self.max_certified_error = 0.0
        self.max_certified_error_rel = 0.0

    def _key(self, tag: str, A: np.ndarray, extra=None):
        return (tag, A.shape, A.tobytes(), extra)

    def w(self, A) -> float:
        A = np.asarray(A, dtype=complex)
        key = self._key("w", A)
        hit = self._memo.get(key)
        if hit is None:
            denom = max(spectral_norm(A), 1.0)
            res = numerical_radius(A, tol=self.tol_rel * denom, max_evals=self.max_evals)
            self.radius_calls += 1
            self.max_certified_error = max(self.max_certified_error, res.certified_error)
            self.max_certified_error_rel = max(
                self.max_certified_error_rel, res.certified_error / denom
            )
            hit = self._memo[key] = res.value
        return hit

    def wt(self, A, t: float) -> float:
        return self.w(weighted_combination(A, t))

    def norm(self, A) -> float:
        A = np.asarray(A, dtype=complex)
        key = self._key("norm", A)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = spectral_norm(A)
        return hit

    def wt_norm(self, A, t: float) -> float:
        return self.norm(weighted_combination(A, t))

    def aluthge(self, A) -> np.ndarray:
        A = np.asarray(A, dtype=complex)
        key = self._key("aluthge", A)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = aluthge(A)
        return hit

    def antidiag_sup(self, X, Y, t: float) -> float:
        X = np.asarray(X, dtype=complex)
        Y = np.asarray(Y, dtype=complex)
        key = ("antisup", X.shape, X.tobytes(), Y.tobytes(), float(t))
        hit = self._memo.get(key)
        if hit is None:
            tol = self.tol_rel * max(self.norm(X), self.norm(Y), 1.0)
            hit = self._memo[key] = antidiag_sup(X, Y, t, tol=tol)
        return hit

    def stats(self) -> dict:
        return {
            "radius_calls": self.radius_calls,
            "max_certified_error": self.max_certified_error,
            "max_certified_error_rel": self.max_certified_error_rel,
        }


def _ctx(ctx: EvalContext | None) -> EvalContext:
    return ctx if ctx is not None else EvalContext()


def _unit(e: np.ndarray, name: str = "e") -> np.ndarray:
    e = np.asarray(e, dtype=complex)
    nrm = float(np.linalg.norm(e))
    if abs(nrm - 1.0) > 1e-12:
        raise ValueError(f"{name} must be a unit vector (||{name}|| = {nrm!r})")
    return e


def _gram(A: np.ndarray) -> np.ndarray:
    # |A|^2 = A* A
    return adjoint(A) @ A


def _cogram(A: np.ndarray) -> np.ndarray:
    # |A*|^2 = A A*
    return A @ adjoint(A)


# ---------------------------------------------------------------------------
# vector lemmas


def check_buzano(x, y, e) -> BoundResult:
    """|<x,e><e,y>| <= (|<x,y>| + ||x|| ||y||) / 2 for unit e."""
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    e = _unit(e)
    lhs = abs(inner(x, e) * inner(e, y))
    rhs = 0.5 * (abs(inner(x, y)) + np.linalg.norm(x) * np.linalg.norm(y))
    return _result("buzano", lhs, rhs, {})


def check_power_inequality(T, x, r: float, ctx: EvalContext | None = None) -> BoundResult:
    """<Tx,x>^r <= <T^r x,x> for PSD T, unit x and r >= 1."""
    if r < 1:
        raise ValueError("power r must be >= 1")
    T = as_operator(T)
    x = _unit(x, "x")
    qf = max(float(np.real(inner(T @ x, x))), 0.0)
    lhs = qf**r
    rhs = float(np.real(inner(psd_power(T, r) @ x, x)))
    return _result("power_psd", lhs, rhs, {"r": float(r)})


def check_mixed_schwarz(T, x, y, alpha: float) -> BoundResult:
    """|<Tx,y>|^2 <= <|T|^(2a) x,x> <|T*|^(2(1-a)) y,y> for a in [0,1]."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    T = as_operator(T)
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    lhs = abs(inner(T @ x, y)) ** 2
    left = float(np.real(inner(psd_power(_gram(T), alpha) @ x, x)))
    right = float(np.real(inner(psd_power(_cogram(T), 1.0 - alpha) @ y, y)))
    return _result("mixed_schwarz", lhs, left * right, {"alpha": float(alpha)})


def check_polarization(T, x, y) -> BoundResult:
    """Generalized polarization identity; reports the reconstruction error."""
    T = as_operator(T)
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)

    def q(z):
        return inner(T @ z, z)

    recon = 0.25 * (q(x + y) - q(x - y)) + 0.25j * (q(x + 1j * y) - q(x - 1j * y))
    deviation = abs(inner(T @ x, y) - recon)
    return _identity_result("polarization", deviation, {})


def check_ext_buzano(x, y, e, alpha: float) -> BoundResult:
    """|<x,e><e,y>|^2 <= ((1+a)||x||^2||y||^2 + (3-a)||x|| ||y|| |<x,y>|) / 4."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    e = _unit(e)
    lhs = abs(inner(x, e) * inner(e, y)) ** 2
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    rhs = 0.25 * (
        (1.0 + alpha) * nx**2 * ny**2 + (3.0 - alpha) * nx * ny * abs(inner(x, y))
    )
    return _result("ext_buzano", lhs, rhs, {"alpha": float(alpha)})


def check_buzano_gen(x, y, e, alpha: float) -> BoundResult:
    """Interpolated Buzano square bound with weight alpha in [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    x, y = np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)
    e = _unit(e)
    prod = abs(inner(x, e) * inner(e, y))
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    ip = abs(inner(x, y))
    rhs = (alpha / 4.0) * (nx**2 * ny**2 + 2.0 * nx * ny * ip + ip**2) + (
        (1.0 - alpha) / 2.0
    ) * (nx * ny + ip) * prod
    return _result("buzano_gen", prod**2, rhs, {"alpha": float(alpha)})


# ---------------------------------------------------------------------------
# classical single-operator bounds


def check_sandwich_lower(T, ctx: EvalContext | None = None) -> BoundResult:
    """||T|| / 2 <= w(T)."""
    c = _ctx(ctx)
    T = as_operator(T)
    return _result("sandwich_lower", 0.5 * c.norm(T), c.w(T), {})


def check_sandwich_upper(T, ctx: EvalContext | None = None) -> BoundResult:
    """w(T) <= ||T||."""
    c = _ctx(ctx)
    T = as_operator(T)
    return _result("sandwich_upper", c.w(T), c.norm(T), {})


def check_kittaneh_lower(T, ctx: EvalContext | None = None) -> BoundResult:
    """||T*T + TT*|| / 4 <= w(T)^2."""
    c = _ctx(ctx)
    T = as_operator(T)
    lhs = 0.25 * c.norm(_gram(T) + _cogram(T))
    return _result("kittaneh_lower", lhs, c.w(T) ** 2, {})


def check_kittaneh_upper(T, ctx: EvalContext | None = None) -> BoundResult:
    """w(T)^2 <= ||T*T + TT*|| / 2."""
    c = _ctx(ctx)
    T = as_operator(T)
    rhs = 0.5 * c.norm(_gram(T) + _cogram(T))
    return _result("kittaneh_upper", c.w(T) ** 2, rhs, {})


def check_refined_lower(T, ctx: EvalContext | None = None) -> BoundResult:
    """w(T) >= ||T||/2 + | ||Re T|| - ||Im T|| | / 2."""
    c = _ctx(ctx)
    T = as_operator(T)
    re = (T + adjoint(T)) / 2
    im = (T - adjoint(T)) / 2j
    lhs = 0.5 * c.norm(T) + 0.5 * abs(c.norm(re) - c.norm(im))
    return _result("refined_lower", lhs, c.w(T), {})


def check_yamazaki(T, ctx: EvalContext | None = None) -> BoundResult:
    """w(T) <= (||T|| + w(Aluthge(T))) / 2."""
    c = _ctx(ctx)
    T = as_operator(T)
    rhs = 0.5 * (c.norm(T) + c.w(c.aluthge(T)))
    return _result("yamazaki", c.w(T), rhs, {})


# ---------------------------------------------------------------------------
# weighted single-operator bounds (default validity t in [0, 1/2])


def check_th2(T, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2(T) <= (1-2t)^2 w^2(T) + (1-2t) w(T^2) + (1-t) ||T*T + TT*||."""
    c = _ctx(ctx)
    T = as_operator(T)
    t = check_weight(t)
    s = 1.0 - 2.0 * t
    lhs = c.wt(T, t) ** 2
    rhs = (
        s**2 * c.w(T) ** 2
        + s * c.w(T @ T)
        + (1.0 - t) * c.norm(_gram(T) + _cogram(T))
    )
    return _result("th2", lhs, rhs, {"t": t})


def check_ts_product(T, S, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """||TS||_t^2 <= (2-4t+4t^2) ||TS||^2 + (1-2t) [w((TS)^2) + w((S*T*)^2)]."""
    c = _ctx(ctx)
    T, S = as_operator(T), as_operator(S)
    t = check_weight(t)
    P = T @ S
    s = 1.0 - 2.0 * t
    lhs = c.wt_norm(P, t) ** 2
    rhs = (
        (2.0 - 4.0 * t + 4.0 * t**2) * c.norm(P) ** 2
        + s * c.w(P @ P)
        + s * c.w(adjoint(P) @ adjoint(P))
    )
    return _result("ts_product", lhs, rhs, {"t": t})


def check_th3(T, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2(T) <= (1-2t+2t^2) ||TT* + T*T|| + (1-2t) w(T^2 + (T*)^2)."""
    c = _ctx(ctx)
    T = as_operator(T)
    t = check_weight(t)
    Ts = adjoint(T)
    lhs = c.wt(T, t) ** 2
    rhs = (1.0 - 2.0 * t + 2.0 * t**2) * c.norm(_cogram(T) + _gram(T)) + (
        1.0 - 2.0 * t
    ) * c.w(T @ T + Ts @ Ts)
    return _result("th3", lhs, rhs, {"t": t})


def check_th4(T, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2(T) <= (2-4t+4t^2) w^2(T) + (1-2t) w(T^2) + (1-2t) ||TT* + T*T|| / 2."""
    c = _ctx(ctx)
    T = as_operator(T)
    t = check_weight(t)
    lhs = c.wt(T, t) ** 2
    rhs = (
        (2.0 - 4.0 * t + 4.0 * t**2) * c.w(T) ** 2
        + (1.0 - 2.0 * t) * c.w(T @ T)
        + 0.5 * (1.0 - 2.0 * t) * c.norm(_cogram(T) + _gram(T))
    )
    return _result("th4", lhs, rhs, {"t": t})


def check_aluthge_weighted(T, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t(T) <= (1-t) (||T|| + w(Aluthge(T)))."""
    c = _ctx(ctx)
    T = as_operator(T)
    t = check_weight(t)
    rhs = (1.0 - t) * (c.norm(T) + c.w(c.aluthge(T)))
    return _result("aluthge_weighted", c.wt(T, t), rhs, {"t": t})


def check_triangle(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t(X + Y) <= w_t(X) + w_t(Y); valid on all of [0, 1]."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    return _result("triangle", c.wt(X + Y, t), c.wt(X, t) + c.wt(Y, t), {"t": t})


def check_op1_half(T, ctx: EvalContext | None = None) -> BoundResult:
    """w^2(T) <= ||T*T + TT*|| / 4 + w(T^2) / 2 (the t = 1/2 collapse of op1)."""
    c = _ctx(ctx)
    T = as_operator(T)
    rhs = 0.25 * c.norm(_gram(T) + _cogram(T)) + 0.5 * c.w(T @ T)
    return _result("op1_half", c.w(T) ** 2, rhs, {})


def check_cor3_half(X, alpha: float, ctx: EvalContext | None = None) -> BoundResult:
    """w^4(X) <= (1+a)/8 |||X|^4 + |X*|^4|| + (3-a)/8 |||X|^2 + |X*|^2|| w(X^2)."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    c = _ctx(ctx)
    X = as_operator(X)
    g, cg = _gram(X), _cogram(X)
    rhs = ((1.0 + alpha) / 8.0) * c.norm(g @ g + cg @ cg) + (
        (3.0 - alpha) / 8.0
    ) * c.norm(g + cg) * c.w(X @ X)
    return _result("cor3_half", c.w(X) ** 4, rhs, {"alpha": float(alpha)})


# ---------------------------------------------------------------------------
# block-operator bounds


def _block(X, Y, Z, W) -> np.ndarray:
    return assemble(Block2x2(X, Y, Z, W))


def _anti_block(X, Y) -> np.ndarray:
    Z = np.zeros_like(np.asarray(X, dtype=complex))
    return _block(Z, X, Y, Z)


def op1_rhs(X, Y, t: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    s = 1.0 - 2.0 * t
    return (
        (1.0 - 2.0 * t + 2.0 * t**2) * c.norm(_gram(X) + _cogram(Y))
        + (2.0 - 4.0 * t + 4.0 * t**2) * c.w(Y @ X)
        + s * (c.norm(X) ** 2 + c.norm(Y @ X) + c.norm(Y) ** 2)
    )


def check_op1(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2 of [[0,X],[Y,0]] against gram-norm, w(YX) and norm-product terms."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    lhs = c.wt(_anti_block(X, Y), t) ** 2
    return _result("op1", lhs, op1_rhs(X, Y, t, c), {"t": t})


def op2_rhs(X, Y, Z, W, t: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 2
    return (
        8.0 * f * max(c.w(X) ** 2, c.w(W) ** 2)
        + 2.0 * f * max(c.norm(_gram(Z) + _cogram(Y)), c.norm(_gram(Y) + _cogram(Z)))
        + 4.0 * f * max(c.w(Y @ Z), c.w(Z @ Y))
    )


def check_op2(X, Y, Z, W, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2 of [[X,Y],[Z,W]] against 8(1-t)^2 max w^2 + gram + product terms."""
    c = _ctx(ctx)
    X, Y, Z, W = map(as_operator, (X, Y, Z, W))
    t = check_weight(t)
    lhs = c.wt(_block(X, Y, Z, W), t) ** 2
    return _result("op2", lhs, op2_rhs(X, Y, Z, W, t, c), {"t": t})


def op3_rhs(X, Y, Z, W, t: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 2
    corner = c.w(_anti_block(Y @ W, Z @ X))
    big = max(
        c.norm(2.0 * _gram(X) + 3.0 * _cogram(Y) + _gram(Z)),
        c.norm(2.0 * _gram(W) + 3.0 * _cogram(Z) + _gram(Y)),
    )
    return (
        4.0 * f * max(c.w(X) ** 2, c.w(W) ** 2)
        + 4.0 * f * corner
        + 2.0 * f * max(c.w(Y @ Z), c.w(Z @ Y))
        + f * big
    )


def check_op3(X, Y, Z, W, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """w_t^2 of [[X,Y],[Z,W]] with the off-diagonal w([[0,YW],[ZX,0]]) term."""
    c = _ctx(ctx)
    X, Y, Z, W = map(as_operator, (X, Y, Z, W))
    t = check_weight(t)
    lhs = c.wt(_block(X, Y, Z, W), t) ** 2
    return _result("op3", lhs, op3_rhs(X, Y, Z, W, t, c), {"t": t})


def op4_rhs(X, Y, Z, W, t: float, alpha: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 4
    gz, cy = _gram(Z), _cogram(Y)
    gy, cz = _gram(Y), _cogram(Z)
    quartic = max(c.norm(gz @ gz + cy @ cy), c.norm(gy @ gy + cz @ cz))
    quadratic = max(c.norm(gz + cy), c.norm(gy + cz))
    return (
        128.0 * f * max(c.w(X) ** 4, c.w(W) ** 4)
        + 16.0 * f * (1.0 + alpha) * quartic
        + 16.0 * f * (3.0 - alpha) * quadratic * max(c.w(Y @ Z), c.w(Z @ Y))
    )


def check_op4(
    X, Y, Z, W, t: float, alpha: float, ctx: EvalContext | None = None
) -> BoundResult:
    """w_t^4 of [[X,Y],[Z,W]] via the extended Buzano interpolation."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    c = _ctx(ctx)
    X, Y, Z, W = map(as_operator, (X, Y, Z, W))
    t = check_weight(t)
    lhs = c.wt(_block(X, Y, Z, W), t) ** 4
    return _result("op4", lhs, op4_rhs(X, Y, Z, W, t, alpha, c), {"t": t, "alpha": float(alpha)})


def op5_rhs(X, Y, Z, W, t: float, alpha: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 4
    gz, cy = _gram(Z), _cogram(Y)
    gy, cz = _gram(Y), _cogram(Z)
    quartic = max(c.norm(gz @ gz + cy @ cy), c.norm(gy @ gy + cz @ cz))
    quadratic = max(c.norm(gz + cy), c.norm(gy + cz))
    wprod = max(c.w(Y @ Z), c.w(Z @ Y))
    wanti = c.w(_anti_block(Y, Z))
    return (
        128.0 * f * max(c.w(X) ** 4, c.w(W) ** 4)
        + 16.0 * alpha * f * quartic
        + 32.0 * alpha * f * wprod * quadratic
        + 32.0 * alpha * f * max(c.w(Y @ Z) ** 2, c.w(Z @ Y) ** 2)
        + 32.0 * (1.0 - alpha) * f * quadratic * wanti**2
        + 64.0 * (1.0 - alpha) * f * wprod * wanti**2
    )


def check_op5(
    X, Y, Z, W, t: float, alpha: float, ctx: EvalContext | None = None
) -> BoundResult:
    """w_t^4 of [[X,Y],[Z,W]] via the interpolated Buzano square bound."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    c = _ctx(ctx)
    X, Y, Z, W = map(as_operator, (X, Y, Z, W))
    t = check_weight(t)
    lhs = c.wt(_block(X, Y, Z, W), t) ** 4
    return _result("op5", lhs, op5_rhs(X, Y, Z, W, t, alpha, c), {"t": t, "alpha": float(alpha)})


# ---------------------------------------------------------------------------
# corollaries: X = W, Y = Z specializations with the circulant identity as lhs


def _circulant_lhs(X, Y, t: float, ctx: EvalContext, power: int) -> float:
    return max(ctx.wt(X + Y, t) ** power, ctx.wt(X - Y, t) ** power)


def cor1_rhs(X, Y, t: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 2
    return (
        8.0 * f * c.w(X) ** 2
        + 4.0 * f * c.w(Y @ Y)
        + 2.0 * f * c.norm(_gram(Y) + _cogram(Y))
    )


def check_cor1(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """max w_t^2(X +- Y) <= 8(1-t)^2 w^2(X) + 4(1-t)^2 w(Y^2) + 2(1-t)^2 |||Y|^2+|Y*|^2||."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    return _result("cor1", _circulant_lhs(X, Y, t, c, 2), cor1_rhs(X, Y, t, c), {"t": t})


def cor2_rhs(X, Y, t: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 2
    return (
        4.0 * f * (c.w(X) ** 2 + c.w(Y @ X))
        + 2.0 * f * c.w(Y @ Y)
        + f * c.norm(2.0 * _gram(X) + 3.0 * _cogram(Y) + _gram(Y))
    )


def check_cor2(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """max w_t^2(X +- Y) <= 4(1-t)^2 (w^2(X) + w(YX)) + 2(1-t)^2 w(Y^2) + norm term."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    return _result("cor2", _circulant_lhs(X, Y, t, c, 2), cor2_rhs(X, Y, t, c), {"t": t})


def cor3_rhs(X, Y, t: float, alpha: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 4
    g, cg = _gram(Y), _cogram(Y)
    return (
        128.0 * f * c.w(X) ** 4
        + 16.0 * f * (1.0 + alpha) * c.norm(g @ g + cg @ cg)
        + 16.0 * f * (3.0 - alpha) * c.norm(g + cg) * c.w(Y @ Y)
    )


def check_cor3(X, Y, t: float, alpha: float, ctx: EvalContext | None = None) -> BoundResult:
    """max w_t^4(X +- Y) against the fourth-power extended-Buzano bound."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    return _result(
        "cor3",
        _circulant_lhs(X, Y, t, c, 4),
        cor3_rhs(X, Y, t, alpha, c),
        {"t": t, "alpha": float(alpha)},
    )


def cor4_rhs(X, Y, t: float, alpha: float, ctx: EvalContext | None = None) -> float:
    c = _ctx(ctx)
    f = (1.0 - t) ** 4
    g, cg = _gram(Y), _cogram(Y)
    quad = c.norm(g + cg)
    wy2 = c.w(Y @ Y)
    wy = c.w(Y)
    return (
        128.0 * f * c.w(X) ** 4
        + 16.0 * alpha * f * c.norm(g @ g + cg @ cg)
        + 32.0 * alpha * f * wy2 * quad
        + 32.0 * alpha * f * wy2**2
        + 32.0 * (1.0 - alpha) * f * wy**2 * quad
        + 64.0 * (1.0 - alpha) * f * wy2 * wy**2
    )


def check_cor4(X, Y, t: float, alpha: float, ctx: EvalContext | None = None) -> BoundResult:
    """max w_t^4(X +- Y) against the interpolated fourth-power bound."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    return _result(
        "cor4",
        _circulant_lhs(X, Y, t, c, 4),
        cor4_rhs(X, Y, t, alpha, c),
        {"t": t, "alpha": float(alpha)},
    )


# ---------------------------------------------------------------------------
# block route identities (equalities, valid on all of [0, 1])


def check_route_diag(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """Deviation of w_t([[X,0],[0,Y]]) from max(w_t(X), w_t(Y))."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    Z = np.zeros_like(X)
    closed = max(c.wt(X, t), c.wt(Y, t))
    direct = c.wt(_block(X, Z, Z, Y), t)
    return _identity_result("route_diag", abs(closed - direct), {"t": t})


def check_route_offdiag_sym(X, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """Deviation of w_t([[0,X],[X,0]]) from w_t(X)."""
    c = _ctx(ctx)
    X = as_operator(X)
    t = check_weight(t)
    direct = c.wt(_anti_block(X, X), t)
    return _identity_result("route_offdiag_sym", abs(c.wt(X, t) - direct), {"t": t})


def check_route_circulant(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """Deviation of w_t([[X,Y],[Y,X]]) from max(w_t(X+Y), w_t(X-Y))."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    closed = max(c.wt(X + Y, t), c.wt(X - Y, t))
    direct = c.wt(_block(X, Y, Y, X), t)
    return _identity_result("route_circulant", abs(closed - direct), {"t": t})


def check_route_antidiag(X, Y, t: float, ctx: EvalContext | None = None) -> BoundResult:
    """Deviation of w_t([[0,X],[Y,0]]) from its phase-supremum closed form."""
    c = _ctx(ctx)
    X, Y = as_operator(X), as_operator(Y)
    t = check_weight(t)
    closed = c.antidiag_sup(X, Y, t)
    direct = c.wt(_anti_block(X, Y), t)
    return _identity_result("route_antidiag", abs(closed - direct), {"t": t})


# ---------------------------------------------------------------------------
# the registry


@dataclass(frozen=True)
class BoundSpec:
    """A registered inequality: how to evaluate it and where it is valid."""

    id: str
    arity: str  # matrix | pair | quad | vec3 | psd_vec | matrix_vec2
    params: tuple  # subset of ("t", "alpha", "r")
    t_valid: tuple  # (lo, hi) in t, meaningful only when "t" in params
    description: str
    evaluate: callable
    kind: str = "bound"  # bound | identity
    violation_tol: float = 1e-7  # relative negative-margin threshold

    def in_domain(self, t: float | None) -> bool:
        if "t" not in self.params or t is None:
            return True
        lo, hi = self.t_valid
        return lo - 1e-12 <= t <= hi + 1e-12


def _spec(id, arity, params, t_valid, description, evaluate, kind="bound", tol=1e-7):
    return BoundSpec(id, arity, tuple(params), tuple(t_valid), description, evaluate, kind, tol)


FULL = (0.0, 1.0)
HALF = (0.0, 0.5)

REGISTRY: dict[str, BoundSpec] = {
    s.id: s
    for s in [
        _spec(
            "buzano",
            "vec3",
            (),
            FULL,
            "|<x,e><e,y>| <= (|<x,y>| + ||x||*||y||)/2, ||e|| = 1",
            lambda inp, ctx, t, alpha, r: check_buzano(*inp),
            tol=1e-10,
        ),
        _spec(
            "power_psd",
            "psd_vec",
            ("r",),
            FULL,
            "<Tx,x>^r <= <T^r x,x>, T PSD, r >= 1, ||x|| = 1",
            lambda inp, ctx, t, alpha, r: check_power_inequality(*inp, r=r, ctx=ctx),
            tol=1e-10,
        ),
        _spec(
            "mixed_schwarz",
            "matrix_vec2",
            ("alpha",),
            FULL,
            "|<Tx,y>|^2 <= <|T|^(2a)x,x> <|T*|^(2(1-a))y,y>",
            lambda inp, ctx, t, alpha, r: check_mixed_schwarz(*inp, alpha=alpha),
            tol=1e-10,
        ),
        _spec(
            "polarization",
            "matrix_vec2",
            (),
            FULL,
            "<Tx,y> reconstructed from the four quadratic-form evaluations",
            lambda inp, ctx, t, alpha, r: check_polarization(*inp),
            kind="identity",
            tol=1e-12,
        ),
        _spec(
            "ext_buzano",
            "vec3",
            ("alpha",),
            FULL,
            "|<x,e><e,y>|^2 <= ((1+a)||x||^2||y||^2 + (3-a)||x||||y|||<x,y>|)/4",
            lambda inp, ctx, t, alpha, r: check_ext_buzano(*inp, alpha=alpha),
            tol=1e-10,
        ),
        _spec(
            "buzano_gen",
            "vec3",
            ("alpha",),
            FULL,
            "|<x,e><e,y>|^2 <= a/4 (...) + (1-a)/2 (...) |<x,e><e,y>|",
            lambda inp, ctx, t, alpha, r: check_buzano_gen(*inp, alpha=alpha),
            tol=1e-10,
        ),
        _spec(
            "sandwich_lower",
            "matrix",
            (),
            FULL,
            "||T||/2 <= w(T)",
            lambda inp, ctx, t, alpha, r: check_sandwich_lower(*inp, ctx=ctx),
        ),
        _spec(
            "sandwich_upper",
            "matrix",
            (),
            FULL,
            "w(T) <= ||T||",
            lambda inp, ctx, t, alpha, r: check_sandwich_upper(*inp, ctx=ctx),
        ),
        _spec(
            "kittaneh_lower",
            "matrix",
            (),
            FULL,
            "||T*T + TT*||/4 <= w^2(T)",
            lambda inp, ctx, t, alpha, r: check_kittaneh_lower(*inp, ctx=ctx),
        ),
        _spec(
            "kittaneh_upper",
            "matrix",
            (),
            FULL,
            "w^2(T) <= ||T*T + TT*||/2",
            lambda inp, ctx, t, alpha, r: check_kittaneh_upper(*inp, ctx=ctx),
        ),
        _spec(
            "refined_lower",
            "matrix",
            (),
            FULL,
            "w(T) >= ||T||/2 + | ||Re T|| - ||Im T|| |/2",
            lambda inp, ctx, t, alpha, r: check_refined_lower(*inp, ctx=ctx),
        ),
        _spec(
            "yamazaki",
            "matrix",
            (),
            FULL,
            "w(T) <= (||T|| + w(Aluthge(T)))/2",
            lambda inp, ctx, t, alpha, r: check_yamazaki(*inp, ctx=ctx),
        ),
        _spec(
            "th2",
            "matrix",
            ("t",),
            HALF,
            "w_t^2(T) <= (1-2t)^2 w^2(T) + (1-2t) w(T^2) + (1-t) ||T*T + TT*||",
            lambda inp, ctx, t, alpha, r: check_th2(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "ts_product",
            "pair",
            ("t",),
            HALF,
            "||TS||_t^2 <= (2-4t+4t^2)||TS||^2 + (1-2t)[w((TS)^2) + w((S*T*)^2)]",
            lambda inp, ctx, t, alpha, r: check_ts_product(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "th3",
            "matrix",
            ("t",),
            HALF,
            "w_t^2(T) <= (1-2t+2t^2)||TT* + T*T|| + (1-2t) w(T^2 + (T*)^2)",
            lambda inp, ctx, t, alpha, r: check_th3(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "th4",
            "matrix",
            ("t",),
            HALF,
            "w_t^2(T) <= (2-4t+4t^2) w^2(T) + (1-2t) w(T^2) + (1-2t)||TT* + T*T||/2",
            lambda inp, ctx, t, alpha, r: check_th4(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "aluthge_weighted",
            "matrix",
            ("t",),
            HALF,
            "w_t(T) <= (1-t)(||T|| + w(Aluthge(T)))",
            lambda inp, ctx, t, alpha, r: check_aluthge_weighted(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "triangle",
            "pair",
            ("t",),
            FULL,
            "w_t(X+Y) <= w_t(X) + w_t(Y)",
            lambda inp, ctx, t, alpha, r: check_triangle(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "op1_half",
            "matrix",
            (),
            FULL,
            "w^2(T) <= ||T*T + TT*||/4 + w(T^2)/2",
            lambda inp, ctx, t, alpha, r: check_op1_half(*inp, ctx=ctx),
        ),
        _spec(
            "cor3_half",
            "matrix",
            ("alpha",),
            FULL,
            "w^4(X) <= (1+a)/8 |||X|^4+|X*|^4|| + (3-a)/8 |||X|^2+|X*|^2|| w(X^2)",
            lambda inp, ctx, t, alpha, r: check_cor3_half(*inp, alpha=alpha, ctx=ctx),
        ),
        _spec(
            "op1",
            "pair",
            ("t",),
            HALF,
            "w_t^2([[0,X],[Y,0]]) <= (1-2t+2t^2)|||X|^2+|Y*|^2|| + (2-4t+4t^2)w(YX) + (1-2t)(...)",
            lambda inp, ctx, t, alpha, r: check_op1(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "op2",
            "quad",
            ("t",),
            HALF,
            "w_t^2([[X,Y],[Z,W]]) <= 8(1-t)^2 max w^2 + 2(1-t)^2 max gram + 4(1-t)^2 max w(prod)",
            lambda inp, ctx, t, alpha, r: check_op2(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "op3",
            "quad",
            ("t",),
            HALF,
            "w_t^2([[X,Y],[Z,W]]) with w([[0,YW],[ZX,0]]) and 2|X|^2+3|Y*|^2+|Z|^2 terms",
            lambda inp, ctx, t, alpha, r: check_op3(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "op4",
            "quad",
            ("t", "alpha"),
            HALF,
            "w_t^4([[X,Y],[Z,W]]) <= 128(1-t)^4 max w^4 + 16(1-t)^4[(1+a) quartic + (3-a) quad*prod]",
            lambda inp, ctx, t, alpha, r: check_op4(*inp, t=t, alpha=alpha, ctx=ctx),
        ),
        _spec(
            "op5",
            "quad",
            ("t", "alpha"),
            HALF,
            "w_t^4([[X,Y],[Z,W]]) interpolating quartic, product and off-diagonal radius terms",
            lambda inp, ctx, t, alpha, r: check_op5(*inp, t=t, alpha=alpha, ctx=ctx),
        ),
        _spec(
            "cor1",
            "pair",
            ("t",),
            HALF,
            "max w_t^2(X+-Y) <= 8(1-t)^2 w^2(X) + 4(1-t)^2 w(Y^2) + 2(1-t)^2 |||Y|^2+|Y*|^2||",
            lambda inp, ctx, t, alpha, r: check_cor1(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "cor2",
            "pair",
            ("t",),
            HALF,
            "max w_t^2(X+-Y) <= 4(1-t)^2(w^2(X)+w(YX)) + 2(1-t)^2 w(Y^2) + (1-t)^2 ||2|X|^2+3|Y*|^2+|Y|^2||",
            lambda inp, ctx, t, alpha, r: check_cor2(*inp, t=t, ctx=ctx),
        ),
        _spec(
            "cor3",
            "pair",
            ("t", "alpha"),
            HALF,
            "max w_t^4(X+-Y) <= 128(1-t)^4 w^4(X) + 16(1-t)^4[(1+a) quartic + (3-a) quad w(Y^2)]",
            lambda inp, ctx, t, alpha, r: check_cor3(*inp, t=t, alpha=alpha, ctx=ctx),
        ),
        _spec(
            "cor4",
            "pair",
            ("t", "alpha"),
            HALF,
            "max w_t^4(X+-Y) interpolating quartic, w(Y^2) and w(Y) terms",
            lambda inp, ctx, t, alpha, r: check_cor4(*inp, t=t, alpha=alpha, ctx=ctx),
        ),
        _spec(
            "route_diag",
            "pair",
            ("t",),
            FULL,
            "w_t([[X,0],[0,Y]]) == max(w_t(X), w_t(Y))",
            lambda inp, ctx, t, alpha, r: check_route_diag(*inp, t=t, ctx=ctx),
            kind="identity",
            tol=1e-6,
        ),
        _spec(
            "route_offdiag_sym",
            "matrix",
            ("t",),
            FULL,
            "w_t([[0,X],[X,0]]) == w_t(X)",
            lambda inp, ctx, t, alpha, r: check_route_offdiag_sym(*inp, t=t, ctx=ctx),
            kind="identity",
            tol=1e-6,
        ),
        _spec(
            "route_circulant",
            "pair",
            ("t",),
            FULL,
            "w_t([[X,Y],[Y,X]]) == max(w_t(X+Y), w_t(X-Y))",
            lambda inp, ctx, t, alpha, r: check_route_circulant(*inp, t=t, ctx=ctx),
            kind="identity",
            tol=1e-6,
        ),
        _spec(
            "route_antidiag",
            "pair",
            ("t",),
            FULL,
            "w_t([[0,X],[Y,0]]) == sup_theta (1/2)||(1-2t)(e^-it X + e^it Y*) + (e^it X + e^-it Y*)||",
            lambda inp, ctx, t, alpha, r: check_route_antidiag(*inp, t=t, ctx=ctx),
            kind="identity",
            tol=1e-6,
        ),
    ]
}


def get_bound(bound_id: str) -> BoundSpec:
    try:
        return REGISTRY[bound_id]
    except KeyError:
        raise UnknownBound(bound_id) from None


def list_bounds() -> list[BoundSpec]:
    """All registered bounds in stable (id-sorted) order."""
    return [REGISTRY[k] for k in sorted(REGISTRY)]
