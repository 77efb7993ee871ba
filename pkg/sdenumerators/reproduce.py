#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
End-to-end reproduction of the published computations.

:func:`run_checks` recomputes every reference value shipped with the package
and compares exactly. The quick run takes seconds; ``full=True`` adds the
enumerations over all ``2**24`` codewords of qr48.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .balance import balance_all, eliminate_length8
from .codes import (
    builtin_code,
    code_from_indicator,
    expected_distribution,
    refined_distribution,
    weight_distribution,
)
from .config import Settings
from .designs import (
    builtin_profile,
    derivative_from_designs,
    golden_derivative,
    length72_distribution,
    profile_from_distribution,
)
from .enumerator import (
    check_halves,
    collapse,
    derivative,
    derivative_by_steps,
    derivative_step,
    exact_enumerator,
)
from .krawtchouk import enumerate_candidates
from .quadring import ZERO, format_rational, rho_pow
from .transform import is_eigenvector_one

logger = logging.getLogger(__name__)

ELIMINATION_VALUES = {"0", "3/4", "3/2", "9/4", "3", "15/4", "9/2", "21/4"}
SURVIVORS = {(1, 0, 0, 0, 14, 0, 0, 0, 1), (1, 0, 4, 0, 6, 0, 4, 0, 1)}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_text(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return f"{line}: {self.detail}" if self.detail else line


def _golden(name, settings) -> Tuple[bool, str]:
    golden = golden_derivative(name)
    computed = derivative_from_designs(builtin_profile(name))
    ok = computed == golden
    return ok, f"{len(golden)} entries" if ok else "design listing differs from the reference"


def _golay_direct(settings) -> Tuple[bool, str]:
    code = builtin_code("golay24")
    ok = derivative(code, 19, settings) == golden_derivative("golay24")
    return ok, "direct enumeration"


def _golay_profile(settings) -> Tuple[bool, str]:
    profile = profile_from_distribution(weight_distribution(builtin_code("golay24"), settings))
    return profile == builtin_profile("golay24"), "profile from enumerated distribution"


def _length72_distribution(settings) -> Tuple[bool, str]:
    dist = length72_distribution()
    return profile_from_distribution(dist) == builtin_profile("length72"), "A_36 = %d" % dist[36]


def _reference_eigen(settings) -> Tuple[bool, str]:
    names = ("golay24", "qr48", "length72")
    failed = [n for n in names if not is_eigenvector_one(golden_derivative(n).vector)]
    return not failed, "failed: " + ", ".join(failed) if failed else "m = 5"


def _small_codes(settings) -> Tuple[bool, str]:
    problems = []
    for name in ("e8", "c2x4"):
        code = builtin_code(name)
        stepped = derivative(code, 0, settings)
        for t in range(code.n + 1):
            direct = derivative(code, t, settings)
            if direct != stepped:
                problems.append(f"{name} t={t} step")
            if not is_eigenvector_one(direct.vector):
                problems.append(f"{name} t={t} eigen")
            if not check_halves(direct):
                problems.append(f"{name} t={t} halves")
            if t < code.n:
                stepped = derivative_step(stepped)
    return not problems, ", ".join(problems) or "t = 0..8"


def _golay_orders(settings) -> Tuple[bool, str]:
    code = builtin_code("golay24")
    problems = []
    stepped = derivative_by_steps(code, 19, settings)
    for t in range(19, 25):
        d = derivative(code, t, settings)
        if not is_eigenvector_one(d.vector) or not check_halves(d):
            problems.append(str(t))
        if d != stepped:
            problems.append(f"{t} step")
        if t < code.n:
            stepped = derivative_step(stepped)
    return not problems, ", ".join(problems) or "t = 19..24"


def _scalar_sums(settings) -> Tuple[bool, str]:
    problems = []
    for name in ("e8", "c2x4", "golay24"):
        code = builtin_code(name)
        scalar = derivative(code, code.n, settings).scalar
        dist = weight_distribution(code, settings)
        expected = sum((rho_pow(k) * c for k, c in dist.nonzero()), ZERO)
        if scalar != expected or scalar != collapse(derivative(code, code.n - 5, settings)):
            problems.append(name)
    return not problems, ", ".join(problems) or "scalar derivative equals the weight sum"


def _balance(settings, names=("e8", "c2x4", "golay24")) -> Tuple[bool, str]:
    problems = []
    for name in names:
        reports = balance_all(builtin_code(name), settings)
        if not all(r.passed for r in reports) or len({r.lhs for r in reports}) != 1:
            problems.append(name)
    refined = refined_distribution(builtin_code("golay24"), 1, settings)
    if (refined.zero[8], refined.zero[12]) != (506, 1288):
        problems.append("golay24 refined counts")
    return not problems, ", ".join(problems) or ", ".join(names)


def _elimination(settings) -> Tuple[bool, str]:
    candidates = enumerate_candidates(8)
    verdicts = [eliminate_length8(c) for c in candidates]
    values = {format_rational(v.y) for v in verdicts if v.y is not None}
    survivors = {tuple(v.candidate) for v in verdicts if v.survives}
    ok = len(candidates) == 8 and values == ELIMINATION_VALUES and survivors == SURVIVORS
    return ok, f"{len(candidates)} candidates, {len(survivors)} survivors"


def _round_trip(settings) -> Tuple[bool, str]:
    problems = []
    for name in ("e8", "c2x4", "golay24"):
        code = builtin_code(name)
        enumerator = exact_enumerator(code, settings)
        source = enumerator.to_vector() if code.n <= 8 else enumerator
        if not code_from_indicator(source).same_code(code):
            problems.append(name)
    return not problems, ", ".join(problems) or "e8, c2x4, golay24"


def _qr48_direct(settings) -> Tuple[bool, str]:
    code = builtin_code("qr48")
    ok = derivative(code, 43, settings) == golden_derivative("qr48")
    return ok, "2**24 codewords"


def _qr48_distribution(settings) -> Tuple[bool, str]:
    found = weight_distribution(builtin_code("qr48"), settings)
    return found == expected_distribution("qr48"), found.to_text()


QUICK_CHECKS: List[Tuple[str, Callable]] = [
    ("golay24 order-19 listing (design)", lambda s: _golden("golay24", s)),
    ("golay24 order-19 listing (direct)", _golay_direct),
    ("golay24 design profile", _golay_profile),
    ("qr48 order-43 listing (design)", lambda s: _golden("qr48", s)),
    ("length72 distribution", _length72_distribution),
    ("length72 order-67 listing (design)", lambda s: _golden("length72", s)),
    ("reference listings are eigenvectors", _reference_eigen),
    ("e8 and c2x4 derivatives", _small_codes),
    ("golay24 derivatives of order 19..24", _golay_orders),
    ("scalar derivatives", _scalar_sums),
    ("balance identity", _balance),
    ("length-8 elimination", _elimination),
    ("codes from exact enumerators", _round_trip),
]

FULL_CHECKS: List[Tuple[str, Callable]] = [
    ("qr48 weight distribution", _qr48_distribution),
    ("qr48 order-43 listing (direct)", _qr48_direct),
    ("qr48 balance identity", lambda s: _balance(s, names=("qr48",))),
]


def run_checks(full: bool = False, settings: Optional[Settings] = None) -> List[CheckResult]:
    """
    Run the reproduction checks in order.

    A check that raises is reported as failed with the error message.
    """
    checks = QUICK_CHECKS + (FULL_CHECKS if full else [])
    results = []
    for name, check in checks:
        logger.info("running check: %s", name)
        try:
            passed, detail = check(settings)
        except Exception as e:
            logger.exception("check '%s' raised", name)
            passed, detail = False, f"{type(e).__name__}: {e}"
        results.append(CheckResult(name, bool(passed), detail))
    return results
