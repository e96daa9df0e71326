"""Command line interface: ``monomial-lab <command> [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
error, 3 a resource cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .closure import DEFAULT_BOX_CAP, integral_closure
from .core import MonomialIdeal, power
from .errors import MonomialLabError, ResourceError
from .freiman import freiman_test
from .hilbert import hilbert_series, toric_hilbert_formula
from .primdec import ass_profile, associated_primes, has_embedded_primes, is_unmixed
from .textio import format_ideal, ideal_from_json, ideal_to_json, parse_ideal
from .verify import verify_family

SCHEMA_VERSION = "monomial-lab/1"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CLOSURE_NOTES = [
    "closure generators are the lattice points of the Newton polyhedron, "
    "found by exact rational LP over the box [0, max generator exponent]",
]
HILBERT_NOTES = [
    "numerator uses inner exponent n-r; the alternative "
    "n-1 disagrees with the Hilbert function (n=3 gives 1-2t)",
    "binomial C(a,b) is 0 when a < b or a < 0",
]
ASS_NOTES = [
    "associated primes are the supports of an irredundant irreducible decomposition",
    "stabilization index is within the computed window only",
]
FREIMAN_NOTES = [
    "analytic spread is the rank of the generator exponent matrix (equigenerated only)",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ideal", help='ideal text, e.g. "x1^2, x1*x2"')
    common.add_argument("--json", dest="json_file", metavar="FILE",
                        help='ideal as JSON {"n": .., "gens": [[..], ..]}; "-" reads stdin')
    common.add_argument("--nvars", type=int, help="enlarge the ring to this many variables")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--box-cap", type=int, default=DEFAULT_BOX_CAP,
                        help="largest closure candidate box (default %(default)s)")

    parser = _Parser(prog="monomial-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("closure", parents=[common], help="integral closure")
    p = sub.add_parser("power", parents=[common], help="k-th power")
    p.add_argument("-k", type=int, required=True)
    p = sub.add_parser("ass", parents=[common], help="associated primes")
    p.add_argument("--powers", type=int, metavar="KMAX",
                   help="profile Ass(I^k) for k = 1..KMAX")
    p = sub.add_parser("hilbert", parents=[common], help="Hilbert data of M_{n,t}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", type=int, default=4)
    sub.add_parser("freiman", parents=[common], help="Freiman test")
    p = sub.add_parser("verify-family", parents=[common], help="check all M_{n,t} claims")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kmax", type=int)
    return parser


def _read_ideal(args, stdin: TextIO) -> MonomialIdeal:
    if args.ideal is not None and args.json_file is not None:
        raise UsageError("give either --ideal or --json, not both")
    if args.ideal is not None:
        return parse_ideal(args.ideal, args.nvars)
    if args.json_file is not None:
        if args.json_file == "-":
            data = json.load(stdin)
        else:
            with open(args.json_file, encoding="utf-8") as fh:
                data = json.load(fh)
        I = ideal_from_json(data)
        if args.nvars is not None and args.nvars != I.ambient_n:
            raise UsageError("--nvars cannot change the ring of a JSON ideal")
        return I
    raise UsageError(f"{args.command} needs --ideal or --json")


def _primes(primes) -> list:
    return [[i + 1 for i in p.sorted_indices()] for p in primes]


def _cmd_closure(args, I):
    C = integral_closure(I, args.box_cap)
    results = {"ideal": ideal_to_json(C), "text": format_ideal(C),
               "integrally_closed": C == I, "decisions": CLOSURE_NOTES}
    return results, [], format_ideal(C)


def _cmd_power(args, I):
    if args.k < 0:
        raise UsageError("-k must be nonnegative")
    P = power(I, args.k)
    return {"ideal": ideal_to_json(P), "text": format_ideal(P)}, [], format_ideal(P)


def _cmd_ass(args, I):
    if args.powers is None:
        primes = associated_primes(I)
        results = {
            "associated_primes": _primes(primes),
            "unmixed": is_unmixed(I),
            "embedded_primes": has_embedded_primes(I),
            "decisions": ASS_NOTES,
        }
        lines = [" ".join(str(p) for p in primes),
                 f"unmixed: {str(results['unmixed']).lower()}",
                 f"embedded primes: {str(results['embedded_primes']).lower()}"]
        return results, [], "\n".join(lines)
    if args.powers < 1:
        raise UsageError("--powers must be at least 1")
    prof = ass_profile(I, args.powers)
    results = {
        "per_power": [_primes(p) for p in prof.per_power],
        "stabilization_index": prof.stabilization_index,
        "certified_beyond_window": prof.certified_beyond_window,
        "decisions": ASS_NOTES,
    }
    lines = [f"k={k}: " + " ".join(str(p) for p in ps)
             for k, ps in enumerate(prof.per_power, start=1)]
    lines.append(f"stabilization index (k <= {args.powers}): {prof.stabilization_index}")
    return results, [], "\n".join(lines)


def _cmd_hilbert(args, _I):
    if args.n < 2 or args.upto < 0:
        raise UsageError("hilbert needs --n >= 2 and --upto >= 0")
    H = [toric_hilbert_formula(args.n, i) for i in range(args.upto + 1)]
    series = hilbert_series(args.n)
    Q = list(series.numerator)
    e = series.multiplicity()
    results = {"n": args.n, "H": H, "Q": Q,
               "denominator_exponent": series.denominator_exponent,
               "multiplicity": e, "decisions": HILBERT_NOTES}
    text = f"H = {H}\nQ = {Q}\ne = {e}"
    return results, [], text


def _cmd_freiman(args, I):
    r = freiman_test(I)
    results = {"mu_I": r.mu_I, "mu_I2": r.mu_I2, "spread": r.spread, "bound": r.bound,
               "is_freiman": r.is_freiman, "bound_holds": r.bound_holds,
               "decisions": FREIMAN_NOTES}
    text = "\n".join(f"{k}: {json.dumps(results[k])}" for k in
                     ("mu_I", "mu_I2", "spread", "bound", "is_freiman"))
    return results, [], text


def _cmd_verify(args, _I):
    report = verify_family(args.n, args.t, args.kmax, args.box_cap)
    checks = [c.to_json() for c in report.checks]
    results = {"n": args.n, "t": args.t, "overall": report.overall,
               "observations": report.observations,
               "decisions": HILBERT_NOTES + ASS_NOTES}
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.claim_id}: {c.description}"
             for c in report.checks]
    lines.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
    return results, checks, "\n".join(lines)


COMMANDS = {
    "closure": (_cmd_closure, True),
    "power": (_cmd_power, True),
    "ass": (_cmd_ass, True),
    "hilbert": (_cmd_hilbert, False),
    "freiman": (_cmd_freiman, True),
    "verify-family": (_cmd_verify, False),
}

_INPUT_KEYS = ("n", "t", "kmax", "k", "powers", "upto", "box_cap")


def run_command(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
                stderr: Optional[TextIO] = None, stdin: Optional[TextIO] = None) -> int:
    """Run one CLI invocation and return its exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"monomial-lab: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    handler, needs_ideal = COMMANDS[args.command]
    try:
        I = _read_ideal(args, stdin) if needs_ideal else None
        results, checks, text = handler(args, I)
    except ResourceError as exc:
        print(f"monomial-lab: resource cap exceeded: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (UsageError, MonomialLabError, OSError, json.JSONDecodeError) as exc:
        print(f"monomial-lab: error: {exc}", file=stderr)
        return EXIT_USAGE

    if args.format == "json":
        inputs = {k: getattr(args, k) for k in _INPUT_KEYS if getattr(args, k, None) is not None}
        if I is not None:
            inputs["ideal"] = ideal_to_json(I)
        doc = {"version": SCHEMA_VERSION, "command": args.command, "inputs": inputs,
               "results": results, "checks": checks}
        stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    if any(not c["passed"] for c in checks):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
