"""
Command line interface, one command per invocation, with the emitted document
on stdout and logging on stderr.
"""
import argparse
import json
import sys
from fractions import Fraction
import pandas as pd
from .bound.constant import hl_constant_C, HL_PLIMIT
from .bound.engine import BoundTables, evaluate_H, lambda_threshold, exponent_r
from .bound.params import SieveParams, REFERENCE_PARAMS
from .bound.search import parameter_search
from .empirical.counting import count_chen_triples, density_report, density_csv
from .empirical.vector import vector_sieve_inequality_check, TRIALS, SEED
from .golden import run_selftest
from .selberg import BEvaluator, big_B, QUAD_TOL
from .table.dickman import build_rho_table, rho
from .table.sievefn import build_sievefn_table, F, f
from .util.errors import DomainError
from .util.log import Handle, stream_to_stderr

logger = Handle(__name__)

COMMANDS = [
    "rho",
    "sievefn",
    "bigB",
    "bound",
    "lambda",
    "search",
    "count",
    "density",
    "hlconst",
    "vscheck",
]
SEARCH_WIDTH = 0.2
SEARCH_BUDGET = 27


def fraction(text):
    """Parse `1/410` or `0.0145` exactly, then convert to :class:`float`."""
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a number or fraction: {!r}".format(text))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="almostprime",
        description="Sieve bounds for primes p with p+2 and p+6 almost prime.",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS)
    t1, t2, t, lam = REFERENCE_PARAMS
    parser.add_argument("--theta1", type=fraction, default=float(t1))
    parser.add_argument("--theta2", type=fraction, default=float(t2))
    parser.add_argument("--theta", type=fraction, default=float(t))
    parser.add_argument("--lambda", dest="lam", type=fraction, default=float(lam))
    parser.add_argument("--x", type=int, nargs="+", default=[10 ** 6])
    parser.add_argument("--r", type=int, default=76)
    parser.add_argument("--plimit", type=int, default=HL_PLIMIT)
    parser.add_argument("--s", type=fraction)
    parser.add_argument("--s1", type=fraction)
    parser.add_argument("--s2", type=fraction)
    parser.add_argument("--tol", type=float, default=QUAD_TOL)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--output", choices=["json", "csv", "plain"], default="json")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--seed", type=int, default=SEED)
    parser.add_argument("--selftest", action="store_true")
    parser.add_argument("--z", type=int, default=30)
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--trials", type=int, default=TRIALS)
    parser.add_argument("--budget", type=int, default=SEARCH_BUDGET)
    parser.add_argument("--log-level", default="WARNING")
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(
            "{} requires {}".format(args.command, ", ".join("--" + n for n in missing))
        )


def _tables(args):
    return BoundTables.build(cache_dir=args.cache_dir, quad_tol=args.tol, p_limit=args.plimit)


def _params(args, lam=True):
    return SieveParams(args.theta1, args.theta2, args.theta, args.lam if lam else None)


def run(args):
    """
    Execute a parsed command.

    Returns
    -------
    :class:`dict` | :class:`pandas.DataFrame`
        The document to emit.
    """
    if args.selftest:
        return run_selftest(_tables(args))
    cmd = args.command
    if cmd is None:
        raise DomainError("a command or --selftest is required")
    if cmd == "rho":
        _require(args, "s")
        table = build_rho_table(cache_dir=args.cache_dir)
        return {"s": args.s, "rho": rho(table, args.s)}
    if cmd == "sievefn":
        _require(args, "s")
        table = build_sievefn_table(cache_dir=args.cache_dir)
        return {"s": args.s, "F": F(table, args.s), "f": f(table, args.s)}
    if cmd == "bigB":
        _require(args, "s1", "s2")
        ev = BEvaluator(build_rho_table(cache_dir=args.cache_dir), quad_tol=args.tol)
        return {"s1": args.s1, "s2": args.s2, "B": big_B(ev, args.s1, args.s2)}
    if cmd == "bound":
        return evaluate_H(_params(args), _tables(args)).to_dict()
    if cmd == "lambda":
        params = _params(args, lam=False)
        lambda_star = lambda_threshold(params, _tables(args))
        return {"lambda_star": lambda_star, "r": exponent_r(params, lambda_star)}
    if cmd == "search":
        centre = {"theta1": args.theta1, "theta2": args.theta2, "theta": args.theta}
        bounds = {
            k: (v * (1 - SEARCH_WIDTH), v * (1 + SEARCH_WIDTH)) for k, v in centre.items()
        }
        params, report, _ = parameter_search(
            bounds, args.budget, _tables(args), threads=args.threads
        )
        out = report.to_dict()
        out["lambda"] = params.lam
        return out
    if cmd == "count":
        if len(args.x) > 1:
            raise DomainError("count takes a single --x, got {:d}; use density".format(len(args.x)))
        tc = count_chen_triples(args.x[0], args.r, p_limit=args.plimit)
        return {
            "x": tc.x,
            "r": tc.r,
            "chen": tc.count_chen,
            "exact": tc.count_exact,
            "prediction": tc.hl_prediction,
        }
    if cmd == "density":
        return density_report(args.x, args.r, p_limit=args.plimit)
    if cmd == "hlconst":
        C, half = hl_constant_C(args.plimit)
        return {"plimit": args.plimit, "C": C, "half_width": half}
    if cmd == "vscheck":
        return vector_sieve_inequality_check(
            args.z, trials=args.trials, seed=args.seed, k=args.k
        ).to_dict()


def emit(doc, output, stream=None):
    """Write a document to `stream` (stdout by default) in the chosen format."""
    stream = stream or sys.stdout
    if isinstance(doc, pd.DataFrame):
        if output == "json":
            text = doc.to_json(orient="records", indent=2)
        elif output == "csv":
            text = density_csv(doc) if "prediction" in doc else doc.to_csv(index=False)
        else:
            text = doc.to_string(index=False)
    elif output == "json":
        text = json.dumps(doc, indent=2)
    elif output == "csv":
        text = pd.DataFrame([doc]).to_csv(index=False, float_format="%.10g")
    else:
        text = "\n".join("{}: {}".format(k, v) for k, v in doc.items())
    stream.write(text.rstrip("\n") + "\n")


def main(argv=None):
    """
    Entry point. Exit status is 0 on success, 2 on a domain or usage error and
    1 on any other failure.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    stream_to_stderr(args.log_level)
    try:
        doc = run(args)
    except DomainError as e:
        logger.error(str(e))
        sys.stderr.write("error: {}\n".format(e))
        return 2
    except Exception as e:
        logger.exception("Internal error")
        sys.stderr.write("internal error: {}\n".format(e))
        return 1
    emit(doc, args.output)
    if args.selftest and not doc["passed"].all():
        return 1
    return 0
