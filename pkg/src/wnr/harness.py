"""Sweep machinery: seeded ensembles x parameter grids -> margin reports.

A sweep evaluates registered bounds on seeded random instances over grids
in t, alpha and r, aggregating per bound the minimum margin, its argmin
instance, tightness counts and any violations.  Every recorded instance
carries the seed that regenerates it bit-identically, so findings replay
exactly.  Probe-mode evaluations (t outside a bound's validity domain)
are collected as findings and never count as violations.
"""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .ensembles import (
    EnsembleSpec,
    derive_seed,
    generate,
    random_vector,
    trial_seed,
)
from .registry import REGISTRY, BoundResult, BoundSpec, EvalContext, get_bound

DEFAULT_KINDS = ("ginibre", "hermitian", "psd", "unitary", "nilpotent", "normal")
DEFAULT_DIMS = (2, 3, 4, 5, 6)
DEFAULT_T_GRID = tuple(round(0.05 * k, 2) for k in range(11))  # 0, 0.05, ..., 0.5
DEFAULT_ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_R_GRID = (1.0, 1.5, 2.0, 3.0)
DEFAULT_SEED = 42
# per (kind, n) cell; chosen so the full default sweep stays inside the
# ten-minute budget on a small machine
DEFAULT_TRIALS = 50


def default_ensembles(
    seed: int = DEFAULT_SEED,
    kinds=DEFAULT_KINDS,
    dims=DEFAULT_DIMS,
    scale: float = 1.0,
) -> list[EnsembleSpec]:
    """One EnsembleSpec per (kind, n) cell, all sharing one base seed."""
    return [EnsembleSpec(kind=k, n=n, scale=scale, seed=seed) for k in kinds for n in dims]


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def build_inputs(spec: BoundSpec, kind: str, n: int, scale: float, instance_seed: int):
    """Deterministic inputs for one bound instance.

    Matrix slots use child seeds 0..3 of `instance_seed`; the PSD operator
    of the power inequality uses slot 10 (kind forced to "psd"), vector
    slots use 20..22 with `e` and the power-inequality `x` normalized.
    """
    if spec.arity == "matrix":
        return (generate(EnsembleSpec(kind, n, scale, derive_seed(instance_seed, 0))),)
    if spec.arity == "pair":
        return tuple(
            generate(EnsembleSpec(kind, n, scale, derive_seed(instance_seed, k)))
            for k in range(2)
        )
    if spec.arity == "quad":
        return tuple(
            generate(EnsembleSpec(kind, n, scale, derive_seed(instance_seed, k)))
            for k in range(4)
        )
    if spec.arity == "psd_vec":
        T = generate(EnsembleSpec("psd", n, scale, derive_seed(instance_seed, 10)))
        x = random_vector(_rng(derive_seed(instance_seed, 21)), n, unit=True)
        return (T, x)
    if spec.arity == "vec3":
        x = random_vector(_rng(derive_seed(instance_seed, 20)), n)
        y = random_vector(_rng(derive_seed(instance_seed, 21)), n)
        e = random_vector(_rng(derive_seed(instance_seed, 22)), n, unit=True)
        return (x, y, e)
    if spec.arity == "matrix_vec2":
        T = generate(EnsembleSpec(kind, n, scale, derive_seed(instance_seed, 0)))
        x = random_vector(_rng(derive_seed(instance_seed, 20)), n)
        y = random_vector(_rng(derive_seed(instance_seed, 21)), n)
        return (T, x, y)
    raise ValueError(f"unknown arity {spec.arity!r}")


def _instance_record(kind, n, scale, seed, t, alpha, r) -> dict:
    rec = {"kind": kind, "n": n, "scale": scale, "seed": seed}
    if t is not None:
        rec["t"] = t
    if alpha is not None:
        rec["alpha"] = alpha
    if r is not None:
        rec["r"] = r
    return rec


def replay(bound_id: str, record: dict) -> BoundResult:
    """Re-evaluate a recorded instance from its reproduction recipe."""
    spec = get_bound(bound_id)
    inputs = build_inputs(
        spec, record["kind"], int(record["n"]), float(record["scale"]), int(record["seed"])
    )
    return spec.evaluate(
        inputs,
        EvalContext(),
        record.get("t"),
        record.get("alpha"),
        record.get("r"),
    )


@dataclass
class BoundAggregate:
    """Running aggregation of one bound across a sweep."""

    trials: int = 0
    min_margin: float = float("inf")
    argmin: dict | None = None
    tight_count: int = 0
    violations: list = field(default_factory=list)
    probe_findings: list = field(default_factory=list)

    def update(self, res: BoundResult, rec: dict, in_domain: bool, tol: float):
        full = dict(rec, lhs=res.lhs, rhs=res.rhs, margin=res.margin)
        if not in_domain:
            if res.margin < -tol * res.scale:
                self.probe_findings.append(full)
            return
        self.trials += 1
        if res.margin < self.min_margin:
            self.min_margin = res.margin
            self.argmin = rec
        if res.tight:
            self.tight_count += 1
        if res.margin < -tol * res.scale:
            self.violations.append(full)

    def merge(self, other: "BoundAggregate"):
        self.trials += other.trials
        if other.min_margin < self.min_margin:
            self.min_margin = other.min_margin
            self.argmin = other.argmin
        self.tight_count += other.tight_count
        self.violations.extend(other.violations)
        self.probe_findings.extend(other.probe_findings)

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "min_margin": None if self.trials == 0 else self.min_margin,
            "argmin": self.argmin,
            "tight_count": self.tight_count,
            "violations": self.violations,
            "probe_findings": self.probe_findings,
        }


@dataclass
class VerificationReport:
    """Aggregate sweep outcome; deterministic except for the timing block."""

    config: dict
    bounds: dict
    engine: dict
    timing: dict

    @property
    def violation_count(self) -> int:
        return sum(len(b["violations"]) for b in self.bounds.values())

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {"config": self.config, "bounds": self.bounds, "engine": self.engine}
        if include_timing:
            out["timing"] = self.timing
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)


def _param_lists(spec: BoundSpec, t_grid, alpha_grid, r_grid):
    ts = list(t_grid) if "t" in spec.params else [None]
    alphas = list(alpha_grid) if "alpha" in spec.params else [None]
    rs = list(r_grid) if "r" in spec.params else [None]
    return ts, alphas, rs


def _thread_count() -> int:
    # auto means one worker: the per-point work is small-array numpy where
    # the interpreter lock dominates, and measured multithreading is a net
    # loss; WNR_THREADS > 1 opts in anyway
    raw = os.environ.get("WNR_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return max(1, k) if k > 0 else 1


def _sweep_cell(bound_ids, ensemble: EnsembleSpec, trials, t_grid, alpha_grid, r_grid, probe, csv_rows):
    """Evaluate all requested bounds on `trials` instances of one ensemble cell."""
    aggs = {bid: BoundAggregate() for bid in bound_ids}
    stats = {"radius_calls": 0, "max_certified_error": 0.0, "max_certified_error_rel": 0.0}
    for trial in range(trials):
        seed = trial_seed(ensemble.seed, ensemble.kind, ensemble.n, trial)
        ctx = EvalContext()
        inputs_cache: dict = {}
        for bid in bound_ids:
            spec = REGISTRY[bid]
            key = spec.arity
            if key not in inputs_cache:
                inputs_cache[key] = build_inputs(
                    spec, ensemble.kind, ensemble.n, ensemble.scale, seed
                )
            inputs = inputs_cache[key]
            ts, alphas, rs = _param_lists(spec, t_grid, alpha_grid, r_grid)
            for t in ts:
                in_domain = spec.in_domain(t)
                if not in_domain and not probe:
                    continue
                for alpha in alphas:
                    for r in rs:
                        res = spec.evaluate(inputs, ctx, t, alpha, r)
                        rec = _instance_record(
                            ensemble.kind, ensemble.n, ensemble.scale, seed, t, alpha, r
                        )
                        aggs[bid].update(res, rec, in_domain, spec.violation_tol)
                        if csv_rows is not None:
                            csv_rows.append(
                                [
                                    bid,
                                    ensemble.kind,
                                    ensemble.n,
                                    ensemble.scale,
                                    seed,
                                    "" if t is None else t,
                                    "" if alpha is None else alpha,
                                    "" if r is None else r,
                                    res.lhs,
                                    res.rhs,
                                    res.margin,
                                    int(res.tight),
                                    "in" if in_domain else "probe",
                                ]
                            )
        cstats = ctx.stats()
        stats["radius_calls"] += cstats["radius_calls"]
        stats["max_certified_error"] = max(
            stats["max_certified_error"], cstats["max_certified_error"]
        )
        stats["max_certified_error_rel"] = max(
            stats["max_certified_error_rel"], cstats["max_certified_error_rel"]
        )
    return aggs, stats


def run_sweep(
    bounds=None,
    ensembles=None,
    t_grid=DEFAULT_T_GRID,
    alpha_grid=DEFAULT_ALPHA_GRID,
    r_grid=DEFAULT_R_GRID,
    trials: int = DEFAULT_TRIALS,
    probe: bool = False,
    seed: int = DEFAULT_SEED,
    csv_path=None,
) -> VerificationReport:
    """Evaluate bounds across ensembles and parameter grids.

    Violations are data, not errors: they land in the report and the
    caller decides what to do with them.  Two calls with identical
    arguments produce identical reports up to the timing block.  When
    `csv_path` is given, one row per evaluation is also written (this
    forces single-threaded evaluation so row order is reproducible).
    """
    t0 = time.perf_counter()
    if bounds is None:
        bound_ids = sorted(REGISTRY)
    else:
        bound_ids = [get_bound(b).id for b in bounds]
    if ensembles is None:
        ensembles = default_ensembles(seed=seed)

    csv_rows = [] if csv_path is not None else None
    workers = 1 if csv_path is not None else _thread_count()

    cells = list(ensembles)
    args = [
        (bound_ids, cell, trials, t_grid, alpha_grid, r_grid, probe, csv_rows)
        for cell in cells
    ]
    if workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda a: _sweep_cell(*a), args))
    else:
        partials = [_sweep_cell(*a) for a in args]

    totals = {bid: BoundAggregate() for bid in bound_ids}
    engine = {"radius_calls": 0, "max_certified_error": 0.0, "max_certified_error_rel": 0.0}
    for aggs, stats in partials:
        for bid in bound_ids:
            totals[bid].merge(aggs[bid])
        engine["radius_calls"] += stats["radius_calls"]
        engine["max_certified_error"] = max(
            engine["max_certified_error"], stats["max_certified_error"]
        )
        engine["max_certified_error_rel"] = max(
            engine["max_certified_error_rel"], stats["max_certified_error_rel"]
        )

    if csv_path is not None:
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                [
                    "bound", "kind", "n", "scale", "seed", "t", "alpha", "r",
                    "lhs", "rhs", "margin", "tight", "domain",
                ]
            )
            writer.writerows(csv_rows)

    config = {
        "bounds": bound_ids,
        "ensembles": [
            {"kind": c.kind, "n": c.n, "scale": c.scale, "seed": c.seed} for c in cells
        ],
        "t_grid": list(t_grid),
        "alpha_grid": list(alpha_grid),
        "r_grid": list(r_grid),
        "trials": trials,
        "probe": probe,
    }
    report = VerificationReport(
        config=config,
        bounds={bid: totals[bid].to_dict() for bid in bound_ids},
        engine=engine,
        timing={"total_seconds": time.perf_counter() - t0},
    )
    return report


def tightness_scan(
    bound_id: str,
    ensembles=None,
    t_grid=DEFAULT_T_GRID,
    alpha_grid=DEFAULT_ALPHA_GRID,
    r_grid=DEFAULT_R_GRID,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> list[dict]:
    """Instances where the bound is tight (|margin| <= 1e-7 * scale)."""
    spec = get_bound(bound_id)
    if ensembles is None:
        ensembles = default_ensembles(seed=seed)
    hits = []
    for cell in ensembles:
        for trial in range(trials):
            iseed = trial_seed(cell.seed, cell.kind, cell.n, trial)
            inputs = build_inputs(spec, cell.kind, cell.n, cell.scale, iseed)
            ctx = EvalContext()
            ts, alphas, rs = _param_lists(spec, t_grid, alpha_grid, r_grid)
            for t in ts:
                if not spec.in_domain(t):
                    continue
                for alpha in alphas:
                    for r in rs:
                        res = spec.evaluate(inputs, ctx, t, alpha, r)
                        if res.tight:
                            rec = _instance_record(
                                cell.kind, cell.n, cell.scale, iseed, t, alpha, r
                            )
                            hits.append(dict(rec, margin=res.margin))
    return hits


# ---------------------------------------------------------------------------
# counterexample hunting


def _param_layout(spec: BoundSpec, n: int) -> list[tuple[str, int]]:
    if spec.arity == "matrix":
        return [("matrix", n)]
    if spec.arity == "pair":
        return [("matrix", n), ("matrix", n)]
    if spec.arity == "quad":
        return [("matrix", n)] * 4
    if spec.arity == "psd_vec":
        return [("psd", n), ("unit", n)]
    if spec.arity == "vec3":
        return [("vector", n), ("vector", n), ("unit", n)]
    if spec.arity == "matrix_vec2":
        return [("matrix", n), ("vector", n), ("vector", n)]
    raise ValueError(f"unknown arity {spec.arity!r}")


def _slot_size(role: str, n: int) -> int:
    return 2 * n * n if role in ("matrix", "psd") else 2 * n


def _inputs_from_params(layout, params: np.ndarray):
    out = []
    pos = 0
    for role, n in layout:
        size = _slot_size(role, n)
        chunk = params[pos : pos + size]
        pos += size
        if role in ("matrix", "psd"):
            M = (chunk[: n * n] + 1j * chunk[n * n :]).reshape(n, n)
            if role == "psd":
                M = M @ M.conj().T / n
                M = (M + M.conj().T) / 2
            out.append(M)
        else:
            v = chunk[:n] + 1j * chunk[n:]
            if role == "unit":
                nrm = np.linalg.norm(v)
                if nrm < 1e-12:
                    v = np.zeros(n, dtype=complex)
                    v[0] = 1.0
                else:
                    v = v / nrm
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class HuntResult:
    bound_id: str
    result: BoundResult
    inputs: tuple
    restart_seed: int
    evaluations: int


def hunt(
    bound_id: str,
    t: float | None = None,
    alpha: float | None = None,
    r: float | None = None,
    n: int = 2,
    restarts: int = 8,
    steps: int = 10,
    seed: int = DEFAULT_SEED,
    init_scale: float = 1.0,
    max_rounds: int = 40,
) -> HuntResult:
    """Minimize a bound's margin by random restarts plus coordinate descent.

    Each restart perturbs one real coordinate of the flattened inputs at a
    time, halving the step after a non-improving full pass and stopping
    after `steps` such passes or `max_rounds` total passes (margins of
    already-violated bounds can decrease forever under rescaling, so a
    hard cap is required).  Returns the smallest-margin instance found
    with the restart seed that regenerates its starting point.
    """
    spec = get_bound(bound_id)
    layout = _param_layout(spec, n)
    dim = sum(_slot_size(role, m) for role, m in layout)

    t_eff = t if "t" in spec.params else None
    alpha_eff = alpha if "alpha" in spec.params else None
    if "alpha" in spec.params and alpha_eff is None:
        alpha_eff = 0.5
    r_eff = r if "r" in spec.params else None
    if "r" in spec.params and r_eff is None:
        r_eff = 2.0

    evals = 0

    def objective(params: np.ndarray) -> BoundResult:
        nonlocal evals
        evals += 1
        inputs = _inputs_from_params(layout, params)
        return spec.evaluate(inputs, EvalContext(), t_eff, alpha_eff, r_eff)

    best: BoundResult | None = None
    best_params = None
    best_restart = seed
    for restart in range(restarts):
        rseed = derive_seed(seed, restart)
        rng = _rng(rseed)
        params = init_scale * rng.standard_normal(dim)
        res = objective(params)
        step = 0.5 * init_scale
        stale = 0
        rounds = 0
        while stale < steps and rounds < max_rounds and step > 1e-9:
            rounds += 1
            improved = False
            for i in range(dim):
                base = params[i]
                for delta in (step, -step):
                    params[i] = base + delta
                    cand = objective(params)
                    if cand.margin < res.margin - 1e-15:
                        res = cand
                        base = params[i]
                        improved = True
                params[i] = base
            if improved:
                stale = 0
            else:
                step *= 0.5
                stale += 1
        if best is None or res.margin < best.margin:
            best = res
            best_params = params.copy()
            best_restart = rseed
    return HuntResult(
        bound_id=spec.id,
        result=best,
        inputs=_inputs_from_params(layout, best_params),
        restart_seed=best_restart,
        evaluations=evals,
    )
