#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Command line interface: ``sdenum <command> [options]``.

Exit status is 0 when every requested check passes, 1 when a check fails
and 2 when the input is rejected. Results go to stdout or ``--out``; log
messages go to stderr.
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from .__version__ import __version__
from .balance import balance_all, balance_check, eliminate_length8, format_verdict, parse_candidates
from .codes import BUILTIN_CODES, resolve_code, validate_self_dual, weight_distribution
from .config import get_settings
from .designs import (
    BUILTIN_PROFILES,
    builtin_profile,
    derivative_from_designs,
    golden_derivative,
    profile_for_code,
    read_profile,
)
from .enumerator import FORMATS, derivative, derivative_by_steps, format_derivative, parse_derivative
from .errors import InputError
from .krawtchouk import enumerate_candidates
from .quadring import format_rational, to_structured
from .reproduce import run_checks
from .transform import is_eigenvector_one

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

METHODS = ("direct", "step", "design")


@dataclass
class RunManifest:
    """Everything needed to repeat a run."""

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None
    passed: Optional[bool] = None
    golden_match: Optional[bool] = None
    version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


@dataclass
class Outcome:
    text: str
    passed: bool = True
    golden_match: Optional[bool] = None


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _code(args):
    return resolve_code(name=args.code, generator=args.generator)


def _inputs(args) -> Dict[str, Any]:
    keys = ("code", "generator", "profile", "builtin", "file")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _structured(fmt: str) -> bool:
    return fmt == "structured"


def _dump(data) -> str:
    return json.dumps(data, indent=1) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_info(args, settings) -> Outcome:
    code = _code(args)
    dist = weight_distribution(code, settings)
    try:
        validate_self_dual(code)
        self_dual, reason = True, ""
    except InputError as e:
        self_dual, reason = False, str(e)
    report = {
        "code": code.name,
        "length": code.n,
        "dimension": code.dimension,
        "self_dual": self_dual,
        "min_weight": dist.min_weight(),
        "weight_distribution": dist.to_text(),
    }
    if _structured(args.format):
        return Outcome(_dump(report))
    lines = [
        f"code: {code.name}",
        f"length: {code.n}",
        f"dimension: {code.dimension}",
        f"self-dual: {'yes' if self_dual else 'no'}" + (f" ({reason})" if reason else ""),
        f"min weight: {report['min_weight']}",
        f"weight distribution: {report['weight_distribution']}",
    ]
    return Outcome("\n".join(lines) + "\n")


def _design_profile_for(args, code):
    if args.profile:
        return read_profile(args.profile)
    if args.code in BUILTIN_PROFILES:
        return builtin_profile(args.code)
    return profile_for_code(code)


def _golden_match(name: Optional[str], d) -> Optional[bool]:
    if name not in BUILTIN_PROFILES or d.order != d.n - 5:
        return None
    match = d == golden_derivative(name)
    logger.info("order %d derivative of %s %s the reference listing", d.order, name,
                "matches" if match else "DIFFERS FROM")
    return match


def cmd_derive(args, settings) -> Outcome:
    code = _code(args)
    if args.method == "direct":
        d = derivative(code, args.t, settings)
    elif args.method == "step":
        d = derivative_by_steps(code, args.t, settings)
    else:
        if args.t != code.n - 5:
            raise InputError(
                f"the design method gives order n-5 = {code.n - 5} only, got --t {args.t}"
            )
        d = derivative_from_designs(_design_profile_for(args, code))
    return Outcome(format_derivative(d, args.format), golden_match=_golden_match(args.code, d))


def cmd_design_derive(args, settings) -> Outcome:
    if args.builtin:
        profile = builtin_profile(args.builtin)
    else:
        profile = read_profile(args.profile)
    d = derivative_from_designs(profile)
    return Outcome(format_derivative(d, args.format), golden_match=_golden_match(args.builtin, d))


def cmd_eigencheck(args, settings) -> Outcome:
    d = parse_derivative(_read_text(args.file))
    passed = is_eigenvector_one(d.vector)
    m = d.n - d.order
    if _structured(args.format):
        return Outcome(_dump({"n": d.n, "t": d.order, "m": m, "passed": passed}), passed)
    verdict = "PASS" if passed else "FAIL"
    return Outcome(f"{verdict} n={d.n} t={d.order} K^[{m}]\n", passed)


def cmd_balance(args, settings) -> Outcome:
    code = _code(args)
    if args.all_coordinates:
        reports = balance_all(code, settings)
    else:
        reports = [balance_check(code, args.coordinate, settings)]
    passed = all(r.passed for r in reports)
    independent = len({r.lhs for r in reports}) == 1
    if _structured(args.format):
        records = [
            {
                "coordinate": r.coordinate,
                "lhs": to_structured(r.lhs),
                "rhs": to_structured(r.rhs),
                "target": to_structured(r.target),
                "lhs_equals_rhs": r.lhs_equals_rhs,
                "lhs_equals_target": r.lhs_equals_target,
                "rhs_equals_target": r.rhs_equals_target,
                "passed": r.passed,
            }
            for r in reports
        ]
        text = _dump({"reports": records, "same_lhs_at_every_coordinate": independent})
    else:
        lines = [r.to_text() for r in reports]
        if len(reports) > 1:
            lines.append(f"lhs identical at all {len(reports)} coordinates: {'yes' if independent else 'no'}")
        text = "\n".join(lines) + "\n"
    return Outcome(text, passed and independent)


def cmd_candidates(args, settings) -> Outcome:
    candidates = enumerate_candidates(args.n, even_weights=not args.all_weights)
    if _structured(args.format):
        return Outcome(_dump([list(c) for c in candidates]))
    return Outcome("".join(c.to_csv() + "\n" for c in candidates))


def cmd_eliminate(args, settings) -> Outcome:
    verdicts = [eliminate_length8(c) for c in parse_candidates(_read_text(args.file))]
    if _structured(args.format):
        records = [
            {
                "candidate": list(v.candidate),
                "y": None if v.y is None else format_rational(v.y),
                "survives": v.survives,
                "reason": v.reason,
            }
            for v in verdicts
        ]
        return Outcome(_dump(records))
    return Outcome("".join(format_verdict(v) + "\n" for v in verdicts))


def cmd_reproduce(args, settings) -> Outcome:
    results = run_checks(full=args.full, settings=settings)
    passed = all(r.passed for r in results)
    if _structured(args.format):
        return Outcome(_dump([asdict(r) for r in results]), passed)
    lines = [r.to_text() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return Outcome("\n".join(lines) + "\n", passed)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-v info, -vv debug)")
    common.add_argument("--workers", type=int, default=None,
                        help="Threads for codeword enumeration (overrides SDENUM_WORKERS)")
    common.add_argument("--format", choices=FORMATS, default="paper",
                        help="paper: '<d>*p + <c>' text; structured: JSON")
    common.add_argument("--out", default=None,
                        help="Write the result here and a manifest next to it")
    return common


def _add_code_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--code", choices=BUILTIN_CODES, help="Built-in code")
    source.add_argument("--generator", help="Generator matrix file (0/1 rows)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdenum",
        description="Exact weight enumerators, derivatives and balance checks for binary self-dual codes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    p = sub.add_parser("info", parents=[common], help="Length, dimension and weights of a code")
    _add_code_source(p)
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser("derive", parents=[common], help="Derivative of the exact enumerator")
    _add_code_source(p)
    p.add_argument("--t", type=int, required=True, help="Order of the derivative")
    p.add_argument("--method", choices=METHODS, default="direct")
    p.add_argument("--profile", help="Design profile file for --method design")
    p.set_defaults(handler=cmd_derive)

    p = sub.add_parser("design-derive", parents=[common],
                       help="Order n-5 derivative from a design profile")
    profile = p.add_mutually_exclusive_group(required=True)
    profile.add_argument("--profile", help="Profile file ('n=<n>' then '<w> <b_w>' lines)")
    profile.add_argument("--builtin", choices=BUILTIN_PROFILES, help="Shipped profile")
    p.set_defaults(handler=cmd_design_derive)

    p = sub.add_parser("eigencheck", parents=[common],
                       help="Check that a derivative file is fixed by K^[m]")
    p.add_argument("file", help="Derivative file, '-' for stdin")
    p.set_defaults(handler=cmd_eigencheck)

    p = sub.add_parser("balance", parents=[common], help="Balance identity at a coordinate")
    _add_code_source(p)
    where = p.add_mutually_exclusive_group()
    where.add_argument("--coordinate", type=int, default=1, help="1-based coordinate (default 1)")
    where.add_argument("--all-coordinates", action="store_true")
    p.set_defaults(handler=cmd_balance)

    p = sub.add_parser("candidates", parents=[common],
                       help="Nonnegative solutions of the MacWilliams eigen-equation")
    p.add_argument("--n", type=int, required=True, help="Even length")
    p.add_argument("--all-weights", action="store_true",
                   help="Allow odd weights (the raw solution set)")
    p.set_defaults(handler=cmd_candidates)

    p = sub.add_parser("eliminate", parents=[common],
                       help="Solve the balance identity for length-8 candidates")
    p.add_argument("file", nargs="?", default="-", help="Candidate list, '-' for stdin")
    p.set_defaults(handler=cmd_eliminate)

    p = sub.add_parser("reproduce", parents=[common], aliases=["verify-paper"],
                       help="Recompute every reference value")
    p.add_argument("--full", action="store_true", help="Include the 2**24 qr48 enumerations")
    p.set_defaults(handler=cmd_reproduce)
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _parameters(args) -> Dict[str, Any]:
    skip = {"command", "handler", "verbose", "out", "code", "generator", "profile", "builtin", "file"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        settings = get_settings().with_workers(args.workers)
        outcome = args.handler(args, settings)
        if args.out:
            Path(args.out).write_text(outcome.text)
            manifest = RunManifest(
                command=args.command,
                inputs=_inputs(args),
                parameters=_parameters(args),
                output=args.out,
                passed=outcome.passed,
                golden_match=outcome.golden_match,
            )
            Path(f"{args.out}.manifest.json").write_text(manifest.to_json())
            logger.info("wrote %s and its manifest", args.out)
        else:
            sys.stdout.write(outcome.text)
    except (ValueError, OSError) as e:
        print(f"sdenum {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if outcome.golden_match is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK if outcome.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
