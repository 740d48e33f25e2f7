"""Command-line interface.

Machine-readable JSON goes to stdout; anything meant for humans goes to
stderr.  Exit codes: 0 success (probe findings included), 1 in-domain
violations found by `verify`, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .ensembles import KINDS, EnsembleSpec
from .harness import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_DIMS,
    DEFAULT_KINDS,
    DEFAULT_R_GRID,
    DEFAULT_SEED,
    DEFAULT_T_GRID,
    DEFAULT_TRIALS,
    default_ensembles,
    hunt,
    run_sweep,
)
from .io import load_matrix, matrix_to_json
from .linalg import NotSquare, polar
from .radius import (
    aluthge,
    numerical_radius,
    weighted_norm,
    weighted_numerical_radius,
)
from .registry import REGISTRY, UnknownBound, get_bound
from .blocks import Block2x2, assemble

USAGE_ERROR = 2


class CliError(Exception):
    """Input or usage problem; maps to exit code 2."""


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path):
    try:
        return load_matrix(path)
    except FileNotFoundError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except (ValueError, NotSquare, json.JSONDecodeError) as exc:
        raise CliError(f"bad matrix input {path}: {exc}") from exc


def _effective_tol(tol_rel: float, M) -> float:
    from .linalg import spectral_norm

    return tol_rel * max(spectral_norm(M), 1.0)


def cmd_compute(args) -> int:
    target = args.target
    inputs = args.input or []
    if target == "block":
        if len(inputs) != 4:
            raise CliError("compute block needs exactly four -i inputs (X, Y, Z, W)")
        blocks = [_load(p) for p in inputs]
        try:
            M = assemble(Block2x2(*blocks))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        res = weighted_numerical_radius(M, args.t, tol=_effective_tol(args.tol, M))
        _emit(
            {
                "target": "block",
                "t": args.t,
                "value": res.value,
                "theta_star": res.theta_star,
                "certified_error": res.certified_error,
            }
        )
        return 0

    if len(inputs) != 1:
        raise CliError(f"compute {target} needs exactly one -i input")
    M = _load(inputs[0])
    if target == "radius":
        res = numerical_radius(M, tol=_effective_tol(args.tol, M))
        _emit(
            {
                "target": "radius",
                "value": res.value,
                "theta_star": res.theta_star,
                "certified_error": res.certified_error,
            }
        )
    elif target == "weighted-radius":
        res = weighted_numerical_radius(M, args.t, tol=_effective_tol(args.tol, M))
        _emit(
            {
                "target": "weighted-radius",
                "t": args.t,
                "value": res.value,
                "theta_star": res.theta_star,
                "certified_error": res.certified_error,
            }
        )
    elif target == "weighted-norm":
        _emit({"target": "weighted-norm", "t": args.t, "value": weighted_norm(M, args.t)})
    elif target == "aluthge":
        _emit({"target": "aluthge", "matrix": matrix_to_json(aluthge(M))})
    elif target == "polar":
        parts = polar(M)
        _emit(
            {
                "target": "polar",
                "isometry": matrix_to_json(parts.isometry),
                "modulus": matrix_to_json(parts.modulus),
            }
        )
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown compute target {target!r}")
    return 0


def cmd_verify(args) -> int:
    try:
        bounds = [get_bound(b).id for b in args.bound] if args.bound else None
    except UnknownBound as exc:
        raise CliError(f"unknown bound id {exc.args[0]!r}; see `wnr list-bounds`") from exc

    kinds = args.ensemble or list(DEFAULT_KINDS)
    for k in kinds:
        if k not in KINDS:
            raise CliError(f"unknown ensemble kind {k!r}; pick from {KINDS}")
    dims = args.n or list(DEFAULT_DIMS)
    if any(d < 1 for d in dims):
        raise CliError("dimensions must be >= 1")

    t_grid = [args.t] if args.t is not None else list(DEFAULT_T_GRID)
    alpha_grid = [args.alpha] if args.alpha is not None else list(DEFAULT_ALPHA_GRID)
    if not args.probe:
        checked = bounds if bounds is not None else sorted(REGISTRY)
        for bid in checked:
            spec = REGISTRY[bid]
            for t in t_grid:
                if "t" in spec.params and not spec.in_domain(t):
                    raise CliError(
                        f"t = {t} is outside the validity domain {spec.t_valid} of"
                        f" {bid!r}; rerun with --probe to record findings"
                    )

    ensembles = default_ensembles(seed=args.seed, kinds=kinds, dims=dims, scale=args.scale)
    report = run_sweep(
        bounds=bounds,
        ensembles=ensembles,
        t_grid=t_grid,
        alpha_grid=alpha_grid,
        trials=args.trials,
        probe=args.probe,
        seed=args.seed,
        csv_path=args.csv,
    )

    payload = report.to_dict(include_timing=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
        _info(f"report written to {args.output}")
    _emit(payload)

    n_viol = report.violation_count
    n_probe = sum(len(b["probe_findings"]) for b in report.bounds.values())
    _info(
        f"verify: {n_viol} violation(s), {n_probe} probe finding(s), "
        f"{report.engine['radius_calls']} radius calls"
    )
    return 1 if n_viol > 0 else 0


def cmd_hunt(args) -> int:
    try:
        get_bound(args.bound)
    except UnknownBound as exc:
        raise CliError(f"unknown bound id {exc.args[0]!r}; see `wnr list-bounds`") from exc
    res = hunt(
        args.bound,
        t=args.t,
        alpha=args.alpha,
        n=args.n,
        restarts=args.restarts,
        steps=args.steps,
        seed=args.seed,
    )
    payload = {
        "bound": res.bound_id,
        "margin": res.result.margin,
        "lhs": res.result.lhs,
        "rhs": res.result.rhs,
        "params": res.result.params,
        "restart_seed": res.restart_seed,
        "evaluations": res.evaluations,
        "inputs": [
            matrix_to_json(np.atleast_2d(np.asarray(m)))
            for m in res.inputs
        ],
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
        _info(f"hunt result written to {args.output}")
    _emit(payload)
    return 0


def cmd_list_bounds(args) -> int:
    listing = [
        {
            "id": spec.id,
            "arity": spec.arity,
            "params": list(spec.params),
            "t_valid": list(spec.t_valid) if "t" in spec.params else None,
            "kind": spec.kind,
            "description": spec.description,
        }
        for spec in (REGISTRY[k] for k in sorted(REGISTRY))
    ]
    _emit({"count": len(listing), "bounds": listing})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wnr",
        description="Weighted numerical radius computations and inequality verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one quantity from matrix JSON input")
    p_compute.add_argument(
        "target",
        choices=["radius", "weighted-radius", "weighted-norm", "aluthge", "polar", "block"],
    )
    p_compute.add_argument("-i", "--input", action="append", help="matrix JSON path")
    p_compute.add_argument("--t", type=float, default=0.5)
    p_compute.add_argument("--tol", type=float, default=1e-10, help="relative certification target")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("--bound", action="append", help="bound id (repeatable; default all)")
    p_verify.add_argument("--ensemble", action="append", help="ensemble kind (repeatable)")
    p_verify.add_argument("--n", action="append", type=int, help="dimension (repeatable)")
    p_verify.add_argument("--t", type=float, default=None, help="single t instead of the grid")
    p_verify.add_argument("--alpha", type=float, default=None, help="single alpha instead of the grid")
    p_verify.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--scale", type=float, default=1.0)
    p_verify.add_argument("--probe", action="store_true", help="evaluate t outside validity domains")
    p_verify.add_argument("-o", "--output", help="write the JSON report here as well")
    p_verify.add_argument("--csv", help="write one CSV row per evaluation")
    p_verify.set_defaults(func=cmd_verify)

    p_hunt = sub.add_parser("hunt", help="search for small or negative margins")
    p_hunt.add_argument("--bound", required=True)
    p_hunt.add_argument("--t", type=float, default=None)
    p_hunt.add_argument("--alpha", type=float, default=None)
    p_hunt.add_argument("--n", type=int, default=2)
    p_hunt.add_argument("--restarts", type=int, default=8)
    p_hunt.add_argument("--steps", type=int, default=10)
    p_hunt.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_hunt.add_argument("-o", "--output", help="write the result JSON here as well")
    p_hunt.set_defaults(func=cmd_hunt)

    p_list = sub.add_parser("list-bounds", help="list every registered bound")
    p_list.set_defaults(func=cmd_list_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except CliError as exc:
        _info(f"error: {exc}")
        return USAGE_ERROR
    except (ValueError, UnknownBound) as exc:
        _info(f"error: {exc}")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
