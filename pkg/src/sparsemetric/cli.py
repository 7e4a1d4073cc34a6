"""Command-line entry point.

Records go to stdout as one JSON object per run (with the resolved
configuration); point clouds go out as CSV. Diagnostics and error records
go to stderr. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__
from ._validation import TAU, check_order
from .balls import Ball, ball_boundary_sample_2d, ball_nesting_check, boundary_angles
from .exceptions import InfeasibleError, NoInclusionRegimeError
from .hausdorff import check_point_set, directed_hausdorff, hausdorff
from .norms import check_convexity, check_homogeneity, minkowski_functional, open_pnorm_ball, parse_gauge
from .product import limit_scan, parse_product_metric
from .scalar import check_metric_axioms
from .sparse import RESIDUAL_TOL, LinearSystem, l0_min_bruteforce, surrogate_ranking_experiment


def fmt(v):
    """17 significant digits, enough to round-trip any double."""
    return format(float(v), ".17g")


def dumps(obj):
    """JSON with every float written via :func:`fmt`; non-finite becomes null."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


class UsageError(Exception):
    pass


def _floats(text):
    try:
        return np.array([float(v) for v in text.split(",") if v.strip()])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from exc


def _order(text):
    try:
        return check_order(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _descriptor(parse):
    def check(text):
        try:
            parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
        return text
    return check


def _env_float(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} is not a number: {raw!r}")


def _read_matrix(path):
    return np.loadtxt(path, delimiter=",", ndmin=2, dtype=float)


def _read_vector(path):
    return np.loadtxt(path, delimiter=",", ndmin=1, dtype=float).ravel()


def _config(args):
    cfg = {}
    for k, v in vars(args).items():
        if k == "func":
            continue
        if isinstance(v, np.ndarray):
            v = v.tolist()
        elif isinstance(v, float) and v == math.inf:
            v = "inf"
        cfg[k] = v
    return cfg


def _metric(args):
    return parse_product_metric(args.metric, args.p, args.tau)


def _vec(v):
    return [float(a) for a in np.asarray(v, dtype=float).ravel()]


# subcommands ---------------------------------------------------------------

def cmd_metric_eval(args, out):
    out.write(fmt(_metric(args)(args.x, args.y)) + "\n")


def cmd_axioms_check(args, out):
    report = check_metric_axioms(
        _metric(args), args.low, args.high, args.dim, args.trials, args.tol, args.seed
    )
    violations = [
        {"axiom": v.axiom, "points": [_vec(p) for p in v.points], "magnitude": v.magnitude}
        for v in report.violations[: args.max_report]
    ]
    out.write(dumps({
        "config": _config(args),
        "trials_run": report.trials_run,
        "violation_count": len(report.violations),
        "violations": violations,
    }) + "\n")


def cmd_ball_sample(args, out):
    center = args.center if args.center is not None else np.zeros(2)
    ball = Ball(center, args.r, _metric(args))
    pts = ball_boundary_sample_2d(ball, args.dirs, args.tol)
    for theta, (x, y) in zip(boundary_angles(args.dirs), pts):
        out.write(f"{fmt(theta)},{fmt(x)},{fmt(y)}\n")


def cmd_ball_nest(args, out):
    res = ball_nesting_check(args.r, args.s_fine, args.s_coarse, args.dim, args.samples, args.seed)
    out.write(dumps({
        "config": _config(args),
        "regime": res.regime,
        "n_samples": res.n_samples,
        "n_premise": res.n_premise,
        "violation_count": len(res.violations),
        "violations": [_vec(v) for v in res.violations[: args.max_report]],
    }) + "\n")


def cmd_limit_scan(args, out):
    scan = limit_scan(args.x, args.y, args.s_list, args.tau)
    out.write(dumps({
        "config": _config(args),
        "trajectory": [{"s": s, "d_s": d} for s, d in scan.trajectory],
        "d0": scan.d0,
    }) + "\n")


def cmd_convexity_check(args, out):
    w = check_convexity(parse_gauge(args.gauge), args.dim, args.low, args.high,
                        args.trials, args.tol, args.seed)
    witness = None if w is None else {
        "kind": w.kind, "x": _vec(w.x), "y": _vec(w.y), "t": w.t, "magnitude": w.magnitude,
    }
    out.write(dumps({"config": _config(args), "convex": w is None, "witness": witness}) + "\n")


def cmd_homogeneity_check(args, out):
    w = check_homogeneity(parse_gauge(args.gauge), args.dim, args.low, args.high,
                          args.trials, args.tol, seed=args.seed)
    witness = None if w is None else {
        "kind": w.kind, "scale": w.scale, "x": _vec(w.x), "magnitude": w.magnitude,
    }
    out.write(dumps({"config": _config(args), "homogeneous": w is None, "witness": witness}) + "\n")


def cmd_hausdorff(args, out):
    K = check_point_set(_read_matrix(args.K), "K")
    A = check_point_set(_read_matrix(args.A), "A")
    metric = _metric(args)
    out.write(dumps({
        "config": _config(args),
        "hausdorff": hausdorff(K, A, metric),
        "directed_KA": directed_hausdorff(K, A, metric),
        "directed_AK": directed_hausdorff(A, K, metric),
    }) + "\n")


def cmd_minkowski(args, out):
    body = open_pnorm_ball(args.body_p, len(args.x))
    value = minkowski_functional(body, args.x, args.tol)
    out.write(dumps({
        "config": _config(args),
        "inner_radius": body.inner_radius,
        "outer_radius": body.outer_radius,
        "value": value,
    }) + "\n")


def _system(args):
    return LinearSystem(_read_matrix(args.A), _read_vector(args.b))


def _solution_record(sol):
    return {
        "x": _vec(sol.x),
        "support": [i + 1 for i in sol.support],
        "support_size": len(sol.support),
        "residual": sol.residual,
    }


def cmd_sparse_solve(args, out):
    sol = l0_min_bruteforce(_system(args), args.residual_tol, args.max_support, args.tau)
    out.write(dumps({"config": _config(args), **_solution_record(sol)}) + "\n")


def cmd_surrogate_rank(args, out):
    rep = surrogate_ranking_experiment(_system(args), args.s, args.samples, args.seed,
                                       args.residual_tol, args.tau)
    out.write(dumps({
        "config": _config(args),
        "agreement": rep.agreement,
        "l0_minimizer": _solution_record(rep.l0_minimizer),
        "surrogate_minimizer": _solution_record(rep.surrogate_minimizer),
        "table": [{"d_s": d, "l0": k} for d, k in rep.table],
    }) + "\n")


# parser --------------------------------------------------------------------

def build_parser(tau, residual_tol):
    parser = argparse.ArgumentParser(
        prog="sparsemetric",
        description="Product metrics, d_s sparsity measures, ball geometry and l0 recovery.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-o", "--output", help="write data here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        return p

    def metric_opts(p, default="abs"):
        p.add_argument("--metric", default=default, type=_descriptor(parse_product_metric),
                       help="component descriptors: abs, pow:S, disc; comma-separated for mixed")
        p.add_argument("--p", type=_order, default=1.0, help="combination exponent (>= 1 or inf)")
        p.add_argument("--tau", type=float, default=tau, help="zero tolerance (env TAU)")

    def sampling_opts(p, trials, low=-1.0, high=1.0):
        p.add_argument("--trials", type=int, default=trials)
        p.add_argument("--low", type=float, default=low)
        p.add_argument("--high", type=float, default=high)
        p.add_argument("--seed", type=int, default=0)

    p = add("metric-eval", cmd_metric_eval, "distance between two vectors")
    metric_opts(p)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats, required=True)

    p = add("axioms-check", cmd_axioms_check, "random search for metric-axiom violations")
    metric_opts(p)
    sampling_opts(p, 10_000, -10.0, 10.0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-report", type=int, default=10)

    p = add("ball-sample", cmd_ball_sample, "boundary points of a planar ball (CSV theta,x,y)")
    metric_opts(p)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--dirs", type=int, default=360)
    p.add_argument("--center", type=_floats)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("ball-nest", cmd_ball_nest, "inclusion check between d_s balls")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--s-fine", type=float, default=0.25)
    p.add_argument("--s-coarse", type=float, default=0.75)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-report", type=int, default=10)

    p = add("limit-scan", cmd_limit_scan, "d_s along decreasing s, with the l0 limit")
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--y", type=_floats)
    p.add_argument("--s-list", type=_floats, default=_floats("1,0.5,0.1,0.01,0.001"))
    p.add_argument("--tau", type=float, default=tau)

    for name, func, what in (
        ("convexity-check", cmd_convexity_check, "convexity"),
        ("homogeneity-check", cmd_homogeneity_check, "positive homogeneity"),
    ):
        p = add(name, func, f"falsify {what} of a gauge f:P or g:S")
        p.add_argument("--gauge", required=True, type=_descriptor(parse_gauge))
        p.add_argument("--dim", type=int, default=2)
        p.add_argument("--tol", type=float, default=1e-9)
        sampling_opts(p, 10_000)

    p = add("hausdorff", cmd_hausdorff, "Hausdorff distance between two CSV point sets")
    metric_opts(p)
    p.set_defaults(p=2.0)
    p.add_argument("--K", required=True, help="CSV, one point per row")
    p.add_argument("--A", required=True, help="CSV, one point per row")

    p = add("minkowski", cmd_minkowski, "Minkowski functional of the open unit p-norm ball")
    p.add_argument("--body-p", type=_order, default=2.0)
    p.add_argument("--x", type=_floats, required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    for name, func, help_ in (
        ("sparse-solve", cmd_sparse_solve, "sparsest exact solution by support enumeration"),
        ("surrogate-rank", cmd_surrogate_rank, "compare the d_s minimiser with the l0 optimum"),
    ):
        p = add(name, func, help_)
        p.add_argument("--A", required=True, help="CSV matrix, one row per line, no header")
        p.add_argument("--b", required=True, help="CSV vector")
        p.add_argument("--residual-tol", type=float, default=residual_tol,
                       help="env RESIDUAL_TOL")
        p.add_argument("--tau", type=float, default=tau)
        if name == "sparse-solve":
            p.add_argument("--max-support", type=int)
        else:
            p.add_argument("--s", type=float, default=0.5)
            p.add_argument("--samples", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
    return parser


def _error(kind, message, **extra):
    sys.stderr.write(dumps({"error": kind, "message": message, **extra}) + "\n")


def run(argv=None):
    try:
        tau = _env_float("TAU", TAU)
        residual_tol = _env_float("RESIDUAL_TOL", RESIDUAL_TOL)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    parser = build_parser(tau, residual_tol)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "y", "absent") is None:
        args.y = np.zeros_like(args.x)

    try:
        if args.output:
            with open(args.output, "w", newline="\n") as fh:
                args.func(args, fh)
        else:
            args.func(args, sys.stdout)
    except NoInclusionRegimeError as exc:
        _error("no-inclusion-regime", str(exc), radius=exc.radius, dim=exc.dim)
        return 1
    except InfeasibleError as exc:
        _error("infeasible", str(exc), best_residual=exc.best_residual)
        return 1
    except (ValueError, ArithmeticError, RuntimeError, OSError, IndexError) as exc:
        _error(type(exc).__name__, str(exc).replace("\n", " "))
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
