"""Command-line entry point.

Exit codes: 0 pass / CP / zero discord, 3 fail / not CP / discordant,
2 invalid input, 1 internal error. Errors go to stderr as a single JSON line.
"""
import argparse
import json
import math
import sys

import numpy as np

from . import matlin
from .correlations import DISCORD_TOL, BipartiteState, zero_discord_test
from .errors import QDPError
from .experiments import EXPERIMENTS
from .qdp import CP_TOL, Superoperator, cp_verdict
from .states import GAP_TOL

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_FAIL = 0, 1, 2, 3


class InvalidInput(Exception):
    pass


def dumps(obj):
    """JSON with sorted keys and reals written to 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(obj[k])}"
                               for k in sorted(obj)) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(x) for x in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return "null"
        s = format(x, ".17g")
        return s if any(c in s for c in ".en") else s + ".0"
    if obj is None:
        return "null"
    return json.dumps(obj)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def build_parser():
    parser = _Parser(prog="qdplab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="run a named experiment")
    run.add_argument("experiment")
    run.add_argument("--dim-s", type=int, default=2)
    run.add_argument("--dim-b", type=int, default=2)
    run.add_argument("--trials", type=int, default=100,
                     help="trials, or family samples for commuting-gap")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--eps", type=float, default=0.1)
    run.add_argument("--budget", type=int, default=500)
    run.add_argument("--cp-tol", type=float, default=CP_TOL)
    run.add_argument("--discord-tol", type=float, default=DISCORD_TOL)
    run.add_argument("--gap-tol", type=float, default=GAP_TOL)
    run.add_argument("--out", default=None, help="report path (default: stdout)")
    run.add_argument("--unitary", default=None,
                     help="matrix file with a fixed joint unitary (folklore-cp)")
    run.add_argument("--delta", default=None,
                     help="matrix file with a fixed difference operator (property1-witness)")

    cp = sub.add_parser("check-cp", help="certify complete positivity of a superoperator file")
    cp.add_argument("path")
    cp.add_argument("--cp-tol", type=float, default=CP_TOL)

    disc = sub.add_parser("discord", help="zero-discord test for a bipartite state file")
    disc.add_argument("path")
    disc.add_argument("--discord-tol", type=float, default=DISCORD_TOL)
    disc.add_argument("--gap-tol", type=float, default=GAP_TOL)
    return parser


def _load_matrix(path):
    try:
        return matlin.matrix_from_dict(matlin.load_json(path))
    except OSError as exc:
        raise InvalidInput(str(exc)) from exc


def _experiment_kwargs(args):
    name = args.experiment
    dims = {"dim_s": args.dim_s, "dim_b": args.dim_b}
    if name == "folklore-cp":
        kw = dict(dims, trials=args.trials, seed=args.seed, cp_tol=args.cp_tol)
        if args.unitary:
            kw["unitary"] = _load_matrix(args.unitary)
        return kw
    if name == "property1-witness":
        kw = dict(dims, trials=args.trials, seed=args.seed)
        if args.delta:
            kw["delta"] = _load_matrix(args.delta)
        return kw
    if name in ("hadamard-constraint", "theorem2-pipeline"):
        return dict(dims, seed=args.seed)
    if name == "commuting-gap":
        return dict(dims, samples=args.trials, seed=args.seed)
    return dict(dims, eps=args.eps, budget=args.budget, seed=args.seed,
                cp_tol=args.cp_tol, discord_tol=args.discord_tol, gap_tol=args.gap_tol)


def cmd_run(args):
    if args.experiment not in EXPERIMENTS:
        raise InvalidInput(f"unknown experiment {args.experiment!r}; "
                           f"choose from {sorted(EXPERIMENTS)}")
    if args.dim_s < 2 or args.dim_b < 2:
        raise InvalidInput("dimensions must be at least 2")
    if args.trials < 1 or args.budget < 1:
        raise InvalidInput("trials and budget must be positive")
    config = {k: v for k, v in vars(args).items() if k != "command"}
    report = EXPERIMENTS[args.experiment](**_experiment_kwargs(args))
    out = report.to_dict()
    out["params"]["config"] = config
    text = dumps(out) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_check_cp(args):
    try:
        l = Superoperator.from_dict(matlin.load_json(args.path))
    except OSError as exc:
        raise InvalidInput(str(exc)) from exc
    v = cp_verdict(l, args.cp_tol)
    sys.stdout.write(dumps(v.to_dict()) + "\n")
    return EXIT_OK if v.is_cp else EXIT_FAIL


def cmd_discord(args):
    try:
        rho = BipartiteState.from_dict(matlin.load_json(args.path))
    except OSError as exc:
        raise InvalidInput(str(exc)) from exc
    v = zero_discord_test(rho, args.discord_tol, args.gap_tol)
    sys.stdout.write(dumps(v.to_dict()) + "\n")
    return EXIT_OK if v.is_zero else EXIT_FAIL


COMMANDS = {"run": cmd_run, "check-cp": cmd_check_cp, "discord": cmd_discord}


def _error(kind, detail):
    sys.stderr.write(json.dumps({"error": kind, "detail": str(detail)}) + "\n")


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except InvalidInput as exc:
        _error("invalid-input", exc)
        return EXIT_INVALID
    except QDPError as exc:
        _error(type(exc).__name__, exc)
        return EXIT_INTERNAL if isinstance(exc, RuntimeError) else EXIT_INVALID
    except ValueError as exc:
        _error(type(exc).__name__, exc)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        _error("internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
