#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
The balance identity for self-dual codes and its use against candidates.

Fix a coordinate and let ``A[k][d]`` count the weight-``k`` codewords whose
bit there is ``d``. For every self-dual code::

    sum_k A[k][1] * RHO**(k - 1) == sum_k A[k][0] * RHO**(k + 1)
                                 == (1 + RHO) / 4 * sum_k A[k] * RHO**k

whichever coordinate is chosen. For length 8 the refined table of a
candidate distribution has one unknown, ``y = A[2][0]``; solving the
identity for ``y`` rules out every candidate whose ``y`` is not a
nonnegative integer.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .codes import (
    LinearCode,
    RefinedDistribution,
    WeightDistribution,
    refined_distribution,
    validate_self_dual,
)
from .config import Settings
from .errors import CandidateError
from .quadring import ONE, RHO, QuadRat, format_rational, format_rho, plain, rho_pow

logger = logging.getLogger(__name__)

#: ``(1 + RHO) / 4``
BALANCE_FACTOR = (ONE + RHO) / 4

ELIMINATION_LENGTH = 8


@dataclass(frozen=True)
class BalanceReport:
    """
    The three sides of the balance identity at one coordinate.

    ``coordinate`` is ``None`` for refined tables not tied to a code.
    """

    coordinate: Optional[int]
    lhs: QuadRat
    rhs: QuadRat
    target: QuadRat

    @property
    def lhs_equals_rhs(self) -> bool:
        return self.lhs == self.rhs

    @property
    def lhs_equals_target(self) -> bool:
        return self.lhs == self.target

    @property
    def rhs_equals_target(self) -> bool:
        return self.rhs == self.target

    @property
    def passed(self) -> bool:
        return self.lhs_equals_rhs and self.lhs_equals_target and self.rhs_equals_target

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        where = "-" if self.coordinate is None else self.coordinate
        return (
            f"t={where} lhs={format_rho(self.lhs)} rhs={format_rho(self.rhs)} "
            f"target={format_rho(self.target)} {verdict}"
        )


def balance_sums(refined: RefinedDistribution) -> BalanceReport:
    """Evaluate the three sides of the identity for a refined table."""
    lhs = QuadRat(0)
    rhs = QuadRat(0)
    total = QuadRat(0)
    for k in range(refined.n + 1):
        zero, one = refined.zero[k], refined.one[k]
        if one:
            lhs += rho_pow(k - 1) * one
        if zero:
            rhs += rho_pow(k + 1) * zero
        if zero or one:
            total += rho_pow(k) * (zero + one)
    return BalanceReport(refined.coordinate, lhs, rhs, BALANCE_FACTOR * total)


def balance_residuals(refined: RefinedDistribution) -> Tuple[QuadRat, QuadRat]:
    """``(lhs - rhs, lhs - target)``; both vanish for a self-dual code."""
    report = balance_sums(refined)
    return report.lhs - report.rhs, report.lhs - report.target


def balance_check(code: LinearCode, t: int, settings: Optional[Settings] = None) -> BalanceReport:
    """
    Check the balance identity at coordinate ``t`` (1-based).

    Raises:
        NotSelfDualError: If the code is not self-dual.
        InputError: If ``t`` is outside ``1..n``.
    """
    validate_self_dual(code)
    report = balance_sums(refined_distribution(code, t, settings))
    logger.info("balance at coordinate %d of %s: %s", t, code, "pass" if report.passed else "FAIL")
    return report


def balance_all(code: LinearCode, settings: Optional[Settings] = None) -> List[BalanceReport]:
    """:func:`balance_check` at every coordinate."""
    validate_self_dual(code)
    return [balance_sums(refined_distribution(code, t, settings)) for t in range(1, code.n + 1)]


# ---------------------------------------------------------------------------
# length-8 elimination
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EliminationVerdict:
    """
    Outcome of solving the balance identity for ``y = A[2][0]``.

    ``y`` is ``None`` when no value exists (odd ``A_4`` or inconsistent
    components). ``table`` is the implied refined table for survivors.
    """

    candidate: WeightDistribution
    y: Optional[object]
    survives: bool
    reason: str = ""
    table: Optional[RefinedDistribution] = None


def validate_candidate(candidate: WeightDistribution) -> None:
    """
    Check the preconditions of the length-8 elimination.

    Raises:
        CandidateError: If the candidate is not a symmetric, even-weight
            distribution of length 8 with ``A_0 = 1`` and total 16.
    """
    if candidate.n != ELIMINATION_LENGTH:
        raise CandidateError(f"elimination needs length {ELIMINATION_LENGTH}, got {candidate.n}")
    if candidate[0] != 1:
        raise CandidateError(f"A_0 must be 1, got {candidate[0]}")
    if any(candidate[k] for k in range(1, ELIMINATION_LENGTH + 1, 2)):
        raise CandidateError(f"{candidate.to_csv()} has codewords of odd weight")
    if not candidate.is_symmetric():
        raise CandidateError(f"{candidate.to_csv()} is not symmetric")
    if candidate.total != 1 << (ELIMINATION_LENGTH // 2):
        raise CandidateError(f"{candidate.to_csv()} sums to {candidate.total}, not 16")


def implied_table(candidate: WeightDistribution, y) -> RefinedDistribution:
    """
    The refined table of a length-8 candidate with ``A[2][0] = y``.

    ``A[0][0] = 1, A[2][0] = y, A[4][0] = A_4 / 2, A[6][0] = A_2 - y,
    A[8][0] = 0`` and ``A[k][1] = A_k - A[k][0]``. Entries are ints when
    integral, rationals otherwise.
    """
    validate_candidate(candidate)
    y = QuadRat(y).a
    a2, a4 = candidate[2], candidate[4]
    zero = [0] * (ELIMINATION_LENGTH + 1)
    zero[0] = 1
    zero[2] = plain(y)
    zero[4] = plain(QuadRat(a4).a / 2)
    zero[6] = plain(a2 - y)
    one = tuple(plain(candidate[k] - QuadRat(zero[k]).a) for k in range(ELIMINATION_LENGTH + 1))
    return RefinedDistribution(ELIMINATION_LENGTH, None, tuple(zero), one)


def _is_count(value) -> bool:
    return isinstance(value, int) and value >= 0


def eliminate_length8(candidate: WeightDistribution) -> EliminationVerdict:
    """
    Solve the balance identity for ``y`` and decide whether the candidate survives.

    ``lhs - rhs`` is affine in ``y``; both of its ``(1, sqrt 2)`` components
    must vanish. A candidate survives when ``y`` exists and the implied table
    has nonnegative integer entries.

    Raises:
        CandidateError: If the candidate fails :func:`validate_candidate`.
    """
    validate_candidate(candidate)
    if candidate[4] % 2:
        return EliminationVerdict(candidate, None, False, "A_4 is odd")

    def difference(y):
        lhs_minus_rhs, _ = balance_residuals(implied_table(candidate, y))
        return lhs_minus_rhs

    base = difference(0)
    slope = difference(1) - base
    if not slope:
        reason = "every y balances" if not base else "no y balances"
        return EliminationVerdict(candidate, None, False, reason)
    solved = -base / slope
    if not solved.is_rational:
        return EliminationVerdict(candidate, None, False, "no solution: components disagree")
    y = plain(solved.a)
    table = implied_table(candidate, y)
    if not isinstance(y, int):
        return EliminationVerdict(candidate, y, False, "y is not an integer")
    if not all(_is_count(x) for x in table.zero + table.one):
        return EliminationVerdict(candidate, y, False, "negative count in the refined table")
    return EliminationVerdict(candidate, y, True, table=table)


def parse_candidates(text: str) -> List[WeightDistribution]:
    """
    Read one comma-separated distribution ``A_0,...,A_n`` per line.

    Blank lines and ``#`` comments are skipped.

    Raises:
        CandidateError: If a line is not a list of integers.
    """
    candidates = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            counts = [int(x) for x in line.strip("()[] ").split(",")]
        except ValueError:
            raise CandidateError(f"line {lineno}: '{line}' is not a comma-separated list of integers")
        candidates.append(WeightDistribution.from_sequence(counts))
    return candidates


def format_verdict(verdict: EliminationVerdict) -> str:
    """``<A_0,...,A_n> y=<y> SURVIVES`` or ``... ELIMINATED (<reason>)``."""
    y = "-" if verdict.y is None else format_rational(verdict.y)
    line = f"{verdict.candidate.to_csv()} y={y}"
    if verdict.survives:
        return f"{line} SURVIVES"
    return f"{line} ELIMINATED ({verdict.reason})"


def eliminate_all(candidates: Sequence[WeightDistribution]) -> List[EliminationVerdict]:
    return [eliminate_length8(c) for c in candidates]
