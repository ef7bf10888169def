"""Command-line front end: ``naqc mub|compute|sweep|threshold|witness|random``.

Exit codes: 0 success, 2 invalid input, 3 unsupported dimension,
4 numerical failure. Permutations and basis indices on the command line are
one-based (observables ``A_1 .. A_{d+1}``).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .advantage import naqc_averaged, naqc_fixed_permutation, naqc_optimized
from .errors import NoConvergence, UnsupportedDimension
from .fileio import StateFileError, dumps, read_state, state_to_json, write_state
from .mub import generate_mubs, validate_mubs
from .qmath import BipartiteState
from .scan import FAMILIES, sweep, sweep_csv_text, threshold, write_sweep_csv
from .states import random_bipartite, random_density, random_separable
from .witness import eur_witness, naqc_witness

EXIT_OK, EXIT_INPUT, EXIT_DIM, EXIT_NUMERIC = 0, 2, 3, 4


class CLIError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text, out):
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_square_state(path):
    state = read_state(path)
    if not isinstance(state, BipartiteState):
        raise CLIError(f"{path} holds a single-party state; a bipartite state is required")
    if state.dim_a != state.dim_b:
        raise CLIError(f"dims {list(state.dims)} are not square (dA must equal dB)", EXIT_DIM)
    return state, generate_mubs(state.dim_a)


def cmd_mub(args):
    mubs = generate_mubs(args.d)
    obj = validate_mubs(mubs, args.tol).to_json() if args.validate else mubs.to_json()
    _emit(dumps(obj, indent=1 if not args.validate else 2), args.out)


def cmd_compute(args):
    state, mubs = _load_square_state(args.state)
    if args.framework == "perm":
        if args.perm is None:
            raise CLIError("--framework perm needs --perm")
        report = naqc_fixed_permutation(state, mubs, [p - 1 for p in args.perm], args.measure)
    elif args.perm is not None:
        raise CLIError("--perm is only valid with --framework perm")
    elif args.framework == "averaged":
        report = naqc_averaged(state, mubs, args.measure)
    else:
        report = naqc_optimized(state, mubs, args.measure, derangements_only=args.derangements)
    _emit(dumps(report.to_json(), indent=2), args.out)


def cmd_sweep(args):
    if args.steps < 2:
        raise CLIError("--steps must be at least 2")
    if not 0.0 <= args.x_min < args.x_max <= 1.0:
        raise CLIError("need 0 <= --x-min < --x-max <= 1")
    if args.family == "rho1" and args.d != 2:
        raise CLIError("rho1 requires --d 2")
    xs = np.linspace(args.x_min, args.x_max, args.steps)
    generate_mubs(args.d)
    rows = sweep(args.family, args.d, args.measure, xs, with_eur=not args.no_eur)
    if args.out:
        write_sweep_csv(rows, args.out)
    else:
        sys.stdout.write(sweep_csv_text(rows))


def cmd_threshold(args):
    if args.tol < 1e-8:
        raise CLIError("--tol must be >= 1e-8")
    if not 0.0 <= args.x_min < args.x_max <= 1.0:
        raise CLIError("need 0 <= --x-min < --x-max <= 1")
    if args.family == "rho1" and args.d != 2:
        raise CLIError("rho1 requires --d 2")
    generate_mubs(args.d)
    if args.estimate is None and args.measure is None:
        raise CLIError("give --measure (NAQC criterion) or --estimate (uncertainty witness)")
    result = threshold(
        args.family, args.d, args.measure, args.framework, args.estimate, args.tol, args.x_min, args.x_max
    )
    _emit(dumps(result.to_json(), indent=2), args.out)


def cmd_witness(args):
    state, mubs = _load_square_state(args.state)
    r, s = args.r - 1, args.s - 1
    if args.naqc:
        report = naqc_witness(state, mubs, args.naqc, r, s)
    else:
        report = eur_witness(state, mubs, r, s)
    _emit(dumps(report.to_json(), indent=2), args.out)


def cmd_random(args):
    dims = args.dims
    if len(dims) not in (1, 2) or min(dims) < 1:
        raise CLIError("--dims takes one or two positive integers")
    if args.kind == "separable":
        if len(dims) != 2:
            raise CLIError("separable states need --dims dA,dB")
        _, state = random_separable(dims[0], dims[1], args.k, args.seed)
    elif len(dims) == 2:
        state = random_bipartite(tuple(dims), args.seed)
    else:
        state = random_density(dims[0], args.seed)
    if args.out:
        write_state(args.out, state)
    else:
        sys.stdout.write(dumps(state_to_json(state), indent=1) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="naqc", description="Nonlocal advantage of quantum coherence tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("mub", help="print or validate the MUB set for prime d")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--validate", action="store_true")
    q.add_argument("--tol", type=float, default=1e-10)
    q.add_argument("--out")
    q.set_defaults(func=cmd_mub)

    q = sub.add_parser("compute", help="NAQC report for a state file")
    q.add_argument("state")
    q.add_argument("--measure", choices=["l1", "re"], default="l1")
    q.add_argument("--framework", choices=["averaged", "optimized", "perm"], default="optimized")
    q.add_argument("--perm", type=_int_list, help="one-based permutation, e.g. 2,3,1")
    q.add_argument("--derangements", action="store_true", help="forbid Bob reusing Alice's basis")
    q.add_argument("--out")
    q.set_defaults(func=cmd_compute)

    q = sub.add_parser("sweep", help="CSV sweep over a state family")
    q.add_argument("--family", choices=FAMILIES, required=True)
    q.add_argument("--d", type=int, default=2)
    q.add_argument("--measure", choices=["l1", "re"], default="l1")
    q.add_argument("--steps", type=int, default=101)
    q.add_argument("--x-min", type=float, default=0.0)
    q.add_argument("--x-max", type=float, default=1.0)
    q.add_argument("--no-eur", action="store_true", help="leave the uncertainty columns empty")
    q.add_argument("--out")
    q.set_defaults(func=cmd_sweep)

    q = sub.add_parser("threshold", help="locate where a witness switches on/off")
    q.add_argument("--family", choices=FAMILIES, required=True)
    q.add_argument("--d", type=int, default=2)
    q.add_argument("--measure", choices=["l1", "re"])
    group = q.add_mutually_exclusive_group()
    group.add_argument("--framework", choices=["averaged", "optimized"], default="optimized")
    group.add_argument("--estimate", choices=["T", "M", "F"])
    q.add_argument("--tol", type=float, default=1e-6)
    q.add_argument("--x-min", type=float, default=0.0)
    q.add_argument("--x-max", type=float, default=1.0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_threshold)

    q = sub.add_parser("witness", help="entanglement witnesses for a state file")
    q.add_argument("state")
    q.add_argument("--naqc", choices=["l1", "re"], help="also evaluate the optimized NAQC criterion")
    q.add_argument("--r", type=int, default=1, help="one-based basis index of R (default 1)")
    q.add_argument("--s", type=int, default=2, help="one-based basis index of S (default 2)")
    q.add_argument("--out")
    q.set_defaults(func=cmd_witness)

    q = sub.add_parser("random", help="write a seeded random state file")
    q.add_argument("--kind", choices=["density", "separable"], default="density")
    q.add_argument("--dims", type=_int_list, required=True, help="d or dA,dB")
    q.add_argument("--k", type=int, default=4, help="product terms for separable states")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_random)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CLIError as exc:
        print(f"naqc: {exc}", file=sys.stderr)
        return exc.code
    except UnsupportedDimension as exc:
        print(f"naqc: {exc}", file=sys.stderr)
        return EXIT_DIM
    except NoConvergence as exc:
        print(f"naqc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (StateFileError, ValueError, IndexError) as exc:
        print(f"naqc: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"naqc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
