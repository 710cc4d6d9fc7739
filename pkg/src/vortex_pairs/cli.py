"""Command line: solve, continue, spectrum, validate, export.

Exit codes: 0 success, 1 bad arguments or unreadable input, 2 no convergence,
3 validation failure.
"""

import argparse
import json
import logging
import os
import sys

from .errors import VortexPairError
from .functionals import ProblemSpec
from .io import SolutionFileError, export_csv, export_svg, load_solution, save_solution, solution_to_dict
from .linearization import analytic_multipliers
from .solver import continue_branch, newton_solve
from .validation import validate_solution

EXIT_OK, EXIT_USAGE, EXIT_NO_CONVERGENCE, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_problem_flags(p):
    p.add_argument("--model", choices=["euler", "gsqg"], required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--pair", choices=["corotating", "counter"], default="corotating")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--modes", type=int, default=32)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", required=True)


def build_parser():
    parser = _Parser(prog="vortex-pairs", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve for one pair at a given eps")
    _add_problem_flags(p)
    p.add_argument("--eps", type=float, required=True)

    p = sub.add_parser("continue", help="follow the branch from eps=0 to --eps-max")
    _add_problem_flags(p)
    p.add_argument("--eps-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=20)

    p = sub.add_parser("spectrum", help="print the linearized multipliers at eps=0")
    p.add_argument("--model", choices=["euler", "gsqg"], required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--pair", choices=["corotating", "counter"], default="corotating")
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("validate", help="re-run validation on a stored solution")
    p.add_argument("path")

    p = sub.add_parser("export", help="write boundary points as CSV or SVG")
    p.add_argument("path")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--out", default=None, help="output file (default: standard output)")
    return parser


def _alpha(args):
    if args.model == "euler":
        if args.alpha not in (None, 0.0):
            raise UsageError("--alpha is only meaningful for --model gsqg")
        return 0.0
    if args.alpha is None:
        raise UsageError("--model gsqg needs --alpha")
    return args.alpha


def _spec(args, eps):
    try:
        return ProblemSpec(args.model, args.pair, args.d, eps, _alpha(args), args.modes, args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_tol(tol):
    if not (1e-14 <= tol <= 1e-6):
        raise UsageError("--tol must lie in [1e-14, 1e-6]")


def cmd_solve(args):
    spec = _spec(args, args.eps)
    _check_tol(args.tol)
    try:
        sol = newton_solve(spec, None, args.tol)
    except VortexPairError as exc:
        # a cold start can fail for larger eps; walk up from eps = 0 instead
        logging.info("direct solve failed (%s); continuing from eps = 0", exc)
        branch = continue_branch(spec, spec.epsilon, 10, args.tol)
        if branch.failure:
            print(f"no convergence: {branch.failure}", file=sys.stderr)
            return EXIT_NO_CONVERGENCE
        sol = branch.solutions[-1]
    sol.report = validate_solution(sol)
    save_solution(sol, args.out)
    if not sol.report.passed:
        print("validation failed: " + "; ".join(sol.report.notes), file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_continue(args):
    spec = _spec(args, 0.0)
    _check_tol(args.tol)
    if args.steps < 1:
        raise UsageError("--steps must be positive")
    if not abs(args.eps_max) < 0.5:
        raise UsageError("|--eps-max| must be below 1/2")
    branch = continue_branch(spec, args.eps_max, args.steps, args.tol, validate=validate_solution)
    os.makedirs(args.out, exist_ok=True)
    files = []
    for k, sol in enumerate(branch.solutions):
        name = f"step_{k:03d}.json"
        save_solution(sol, os.path.join(args.out, name))
        files.append({"file": name, "epsilon": sol.spec.epsilon, "velocity": sol.vel.value,
                      "residual_inf": sol.residual_inf,
                      "pass": sol.report.passed if sol.report else None})
    index = {"schema_version": 1, "spec": spec.to_dict(), "eps_max": args.eps_max,
             "steps": args.steps, "eps_reached": branch.eps_reached,
             "failure": branch.failure, "members": files}
    with open(os.path.join(args.out, "index.json"), "w") as fh:
        json.dump(index, fh, indent=1)
        fh.write("\n")
    if branch.failure_kind == "validation":
        print(branch.failure, file=sys.stderr)
        return EXIT_VALIDATION
    if branch.failure:
        print(branch.failure, file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def cmd_spectrum(args):
    alpha = _alpha(args)
    if args.nmax < 1:
        raise UsageError("--nmax must be positive")
    try:
        spec = ProblemSpec(args.model, args.pair, 3.0, 0.0, alpha, N=1, M=8)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    table = analytic_multipliers(spec, args.nmax)
    print("n,multiplier")
    for n, v in enumerate(table.values, start=1):
        print(f"{n},{v!r}")
    return EXIT_OK


def cmd_validate(args):
    sol = load_solution(args.path)
    report = validate_solution(sol)
    print(json.dumps(report.to_dict(), indent=1))
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_export(args):
    sol = load_solution(args.path)
    text = export_csv(sol, args.points) if args.format == "csv" else export_svg(sol, args.points)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "continue": cmd_continue, "spectrum": cmd_spectrum,
            "validate": cmd_validate, "export": cmd_export}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, SolutionFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
