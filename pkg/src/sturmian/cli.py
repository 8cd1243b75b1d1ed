"""Command-line front end.

    sturmian tabulate --n 2 --l 0 --alpha 1 --zeta 1 --rmin 0.1 --rmax 10 --points 50
    sturmian gram --l 0 --nu 1 --alpha 1 --zeta 1 --nmax 8 --M 64 --tol 1e-10
    sturmian residual --eq EQ11 --n 3.2 --l 0.7 --nu 0.5 --alpha 1 --zeta 1
    sturmian quad --a 0.5 --M 16
    sturmian eigen --l 1.3 --nu 0.7 --N 5 --zeta 1

Exit status: 0 on success, 1 on bad arguments or parameters, 2 when a gram
or residual check exceeds --tol.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import odecheck, orbitals
from .errors import DomainError, NumericalFailure
from .quadrature import gauss_laguerre_rule

__all__ = ["run", "main", "dumps", "read_config"]

EXIT_OK, EXIT_USAGE, EXIT_TOLERANCE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _fmt(v):
    if isinstance(v, bool) or v is None:
        return {True: "true", False: "false", None: "null"}[v]
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}" if math.isfinite(v) else "null"
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_fmt(str(k))}: {_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(obj) -> str:
    """JSON text with every float written at 17 significant digits."""
    return _fmt(obj) + "\n"


def read_config(path):
    """Flat ``key = value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lstrip("-").replace("-", "_")] = value
    return out


def _spec_args(p, need_n=True):
    if need_n:
        p.add_argument("--n", type=float, help="principal quantum number n*")
    p.add_argument("--l", type=float, help="orbital quantum number l*")
    p.add_argument("--nu", type=float, default=1.0)
    p.add_argument("--alpha", type=float)
    p.add_argument("--N", type=float, help="dimension; alpha = 4 - N")
    p.add_argument("--zeta", type=float, default=1.0)


def _grid_args(p, rmin=0.1, rmax=20.0, points=64, spacing="log"):
    p.add_argument("--rmin", type=float, default=rmin)
    p.add_argument("--rmax", type=float, default=rmax)
    p.add_argument("--points", type=int, default=points)
    p.add_argument("--spacing", choices=("linear", "log"), default=spacing)


def _common(p, fmt):
    p.add_argument("--format", choices=("csv", "json"), default=fmt)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--config")


def build_parser():
    parser = _Parser(prog="sturmian", description="N-dimensional Coulomb-Sturmians "
                     "with noninteger quantum numbers")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tabulate", help="tabulate R(r) on a grid")
    _spec_args(p)
    _grid_args(p, spacing="linear")
    _common(p, "csv")

    p = sub.add_parser("gram", help="overlap matrix of a family of equal (l, nu, alpha, zeta)")
    _spec_args(p, need_n=False)
    p.add_argument("--nmax", type=float, required=False,
                   help="largest n* in the family n* = l* + nu + k")
    p.add_argument("--M", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-10)
    _common(p, "json")

    p = sub.add_parser("residual", help="residual of a radial differential equation")
    p.add_argument("--eq", choices=odecheck.EQUATIONS, default="EQ11")
    _spec_args(p)
    _grid_args(p)
    p.add_argument("--tol", type=float, default=1e-8)
    _common(p, "json")

    p = sub.add_parser("quad", help="dump a generalized Gauss-Laguerre rule")
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--M", type=int, default=16)
    _common(p, "csv")

    p = sub.add_parser("eigen", help="angular eigenvalue and Sturmian energy")
    _spec_args(p, need_n=False)
    _common(p, "json")
    return parser


def _resolve_alpha(args):
    if (args.alpha is None) == (args.N is None):
        raise UsageError("supply exactly one of --alpha or --N")
    if args.N is not None:
        return orbitals.alpha_from_dimension(args.N)
    return args.alpha


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {' '.join(missing)}")


def _spec(args):
    _require(args, "n", "l")
    return orbitals.validate(args.n, args.l, args.nu, _resolve_alpha(args), args.zeta)


def _grid(args):
    if not args.rmin > 0.0:
        raise UsageError("--rmin must be positive")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    return args


def _cmd_tabulate(args):
    spec = _spec(args)
    _grid(args)
    r, values = orbitals.tabulate(spec, args.rmin, args.rmax, args.points, args.spacing)
    if args.format == "csv":
        return orbitals.tabulate_csv(r, values), EXIT_OK
    return dumps({"spec": spec.as_dict(), "r": r, "R": values}), EXIT_OK


def _cmd_gram(args):
    _require(args, "l", "nmax")
    alpha = _resolve_alpha(args)
    if args.M < 1:
        raise UsageError("--M must be at least 1")
    size = int(math.floor(args.nmax - args.l - args.nu + orbitals.DEGREE_TOL)) + 1
    if size < 1:
        raise UsageError("--nmax is below the lowest n* = l* + nu")
    fam = orbitals.family(args.l, args.nu, alpha, args.zeta, size)
    report = orbitals.gram(fam, args.M)
    status = EXIT_OK
    if max(report.max_offdiag, report.max_diag_deviation) > args.tol:
        status = EXIT_TOLERANCE
    if args.format == "csv":
        return report.to_csv(), status
    return dumps(report.summary()), status


def _cmd_residual(args):
    spec = _spec(args)
    _grid(args)
    if args.spacing == "log":
        grid = np.geomspace(args.rmin, args.rmax, args.points)
    else:
        grid = np.linspace(args.rmin, args.rmax, args.points)
    report = odecheck.residual(args.eq, spec, grid)
    status = EXIT_TOLERANCE if report.max_rel > args.tol else EXIT_OK
    if args.format == "csv":
        lines = ["r,residual"] + [f"{x:.17g},{v:.17g}" for x, v in zip(grid, report.residuals)]
        return "\n".join(lines) + "\n", status
    return dumps(report.to_dict()), status


def _cmd_quad(args):
    if args.M < 1:
        raise UsageError("--M must be at least 1")
    rule = gauss_laguerre_rule(args.a, args.M)
    if args.format == "csv":
        return rule.to_csv(), EXIT_OK
    return dumps({"a": rule.param_a, "M": rule.count_M, "nodes": rule.nodes,
                  "weights": rule.weights, "log_weights": rule.log_weights}), EXIT_OK


def _cmd_eigen(args):
    _require(args, "l")
    alpha = _resolve_alpha(args)
    N = orbitals.dimension_from_alpha(alpha)
    out = {
        "l": args.l, "nu": args.nu, "alpha": alpha, "N": N,
        "l_prime": orbitals.effective_l(args.l, args.nu),
        "eigenvalue": orbitals.angular_eigenvalue(args.l, args.nu, N),
        "zeta": args.zeta,
        "energy": orbitals.sturmian_energy(args.zeta, alpha),
    }
    if args.format == "csv":
        return ",".join(out) + "\n" + ",".join(_fmt(v) for v in out.values()) + "\n", EXIT_OK
    return dumps(out), EXIT_OK


_COMMANDS = {"tabulate": _cmd_tabulate, "gram": _cmd_gram, "residual": _cmd_residual,
             "quad": _cmd_quad, "eigen": _cmd_eigen}


def _apply_config(parser, argv):
    """Re-parse with defaults taken from --config, so explicit flags still win."""
    args = parser.parse_args(argv)
    if not args.config:
        return args
    try:
        values = read_config(args.config)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    sub = parser._subparsers._group_actions[0].choices[args.subcommand]
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, raw in values.items():
        if key not in actions or key in ("config", "help"):
            raise UsageError(f"unknown config key {key!r} for {args.subcommand}")
        act = actions[key]
        try:
            value = act.type(raw) if act.type else raw
        except ValueError as exc:
            raise UsageError(f"bad value for {key}: {raw!r}") from exc
        if act.choices is not None and value not in act.choices:
            raise UsageError(f"bad value for {key}: {raw!r}")
        defaults[key] = value
    sub.set_defaults(**defaults)
    try:
        return parser.parse_args(argv)
    finally:
        sub.set_defaults(**{k: actions[k].default for k in defaults})


def run(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = _apply_config(parser, list(argv))
        text, status = _COMMANDS[args.subcommand](args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except (DomainError, NumericalFailure) as exc:
        print(f"sturmian: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    if status == EXIT_TOLERANCE:
        print(f"sturmian: {args.subcommand} check exceeded --tol {args.tol:g}", file=stderr)
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
