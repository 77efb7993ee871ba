"""
Unit tests for the balance identity and the length-8 elimination.
"""
import pytest

from sdenumerators.balance import (
    BALANCE_FACTOR,
    balance_all,
    balance_check,
    balance_residuals,
    balance_sums,
    eliminate_all,
    eliminate_length8,
    format_verdict,
    implied_table,
    parse_candidates,
    validate_candidate,
)
from sdenumerators.codes import LinearCode, WeightDistribution, refined_distribution
from sdenumerators.enumerator import derivative
from sdenumerators.errors import CandidateError, InputError, NotSelfDualError
from sdenumerators.quadring import ONE, RHO, QuadRat, format_rational, rho_pow


class TestBalanceIdentity:
    """Tests for the three-way identity on real codes."""

    def test_builtin_codes(self, e8, c2x4, golay24):
        """Every coordinate of every shipped code balances."""
        for code in (e8, c2x4, golay24):
            reports = balance_all(code)
            assert len(reports) == code.n
            assert all(report.passed for report in reports)
            assert len({report.lhs for report in reports}) == 1

    def test_e8_values(self, e8):
        """The common value for e8."""
        report = balance_check(e8, 1)
        assert report.lhs == 7 * rho_pow(3) + rho_pow(7)
        assert report.target == BALANCE_FACTOR * (1 + 14 * rho_pow(4) + rho_pow(8))
        assert report.to_text().startswith("t=1 lhs=")
        assert report.to_text().endswith("PASS")

    def test_last_coordinate_matches_derivative(self, e8, c2x4, golay24):
        """At t = n the sides are read off the order n-1 derivative."""
        for code in (e8, c2x4, golay24):
            report = balance_check(code, code.n)
            d = derivative(code, code.n - 1)
            assert report.lhs == d[1]
            assert report.rhs == RHO * d[0]

    def test_residuals(self, golay24):
        """Residuals vanish for self-dual codes."""
        assert balance_residuals(refined_distribution(golay24, 5)) == (QuadRat(0), QuadRat(0))

    def test_requires_self_dual(self):
        """A code that is not self-dual is rejected outright."""
        with pytest.raises(NotSelfDualError):
            balance_check(LinearCode(4, (0b1000, 0b0100)), 1)

    def test_coordinate_range(self, e8):
        """Coordinates are 1-based."""
        with pytest.raises(InputError):
            balance_check(e8, 0)

    def test_failure_is_reported(self, e8):
        """A tampered table fails without raising."""
        refined = refined_distribution(e8, 1)
        tampered = type(refined)(8, 1, refined.zero, (0, 0, 0, 0, 6, 0, 0, 0, 1))
        report = balance_sums(tampered)
        assert not report.passed
        assert report.to_text().endswith("FAIL")


class TestElimination:
    """Tests for the length-8 candidate elimination."""

    def test_survivors(self, length8_candidates):
        """Only A_2 = 0 and A_2 = 4 survive."""
        verdicts = eliminate_all([WeightDistribution.from_sequence(c) for c in length8_candidates])
        survivors = {tuple(v.candidate) for v in verdicts if v.survives}
        assert survivors == {(1, 0, 0, 0, 14, 0, 0, 0, 1), (1, 0, 4, 0, 6, 0, 4, 0, 1)}

    @pytest.mark.parametrize("a2, y", [
        (0, "0"), (1, "3/4"), (2, "3/2"), (3, "9/4"),
        (4, "3"), (5, "15/4"), (6, "9/2"), (7, "21/4"),
    ])
    def test_solved_y(self, length8_candidates, a2, y):
        """y = 3 A_2 / 4."""
        verdict = eliminate_length8(WeightDistribution.from_sequence(length8_candidates[a2]))
        assert format_rational(verdict.y) == y
        assert verdict.survives == (a2 in (0, 4))

    def test_survivor_tables(self, e8, c2x4):
        """Implied tables of survivors are the refined tables of e8 and c2x4."""
        for code, counts in ((e8, (1, 0, 0, 0, 14, 0, 0, 0, 1)), (c2x4, (1, 0, 4, 0, 6, 0, 4, 0, 1))):
            verdict = eliminate_length8(WeightDistribution.from_sequence(counts))
            refined = refined_distribution(code, 1)
            assert verdict.table.zero == refined.zero
            assert verdict.table.one == refined.one

    def test_implied_table(self):
        """Entries follow A[k][1] = A_k - A[k][0]."""
        table = implied_table(WeightDistribution.from_sequence((1, 0, 4, 0, 6, 0, 4, 0, 1)), 3)
        assert table.zero == (1, 0, 3, 0, 3, 0, 1, 0, 0)
        assert table.one == (0, 0, 1, 0, 3, 0, 3, 0, 1)

    def test_format(self, length8_candidates):
        """Verdict lines."""
        survivor = eliminate_length8(WeightDistribution.from_sequence(length8_candidates[0]))
        assert format_verdict(survivor) == "1,0,0,0,14,0,0,0,1 y=0 SURVIVES"
        loser = eliminate_length8(WeightDistribution.from_sequence(length8_candidates[7]))
        assert format_verdict(loser) == "1,0,7,0,0,0,7,0,1 y=21/4 ELIMINATED (y is not an integer)"

    @pytest.mark.parametrize("counts", [
        (1, 0, 14, 0, 1),
        (2, 0, 0, 0, 12, 0, 0, 0, 2),
        (1, 1, 0, 0, 12, 0, 0, 1, 1),
        (1, 0, 2, 0, 10, 0, 1, 0, 2),
        (1, 0, 2, 0, 8, 0, 2, 0, 1),
    ])
    def test_invalid_candidates(self, counts):
        """Wrong length, A_0, odd weights, asymmetry or total."""
        with pytest.raises(CandidateError):
            validate_candidate(WeightDistribution.from_sequence(counts))

    def test_parse_candidates(self):
        """One candidate per line, comments skipped."""
        text = "# length 8\n1,0,0,0,14,0,0,0,1\n\n(1,0,4,0,6,0,4,0,1)  # c2x4\n"
        candidates = parse_candidates(text)
        assert [c.to_csv() for c in candidates] == ["1,0,0,0,14,0,0,0,1", "1,0,4,0,6,0,4,0,1"]
        with pytest.raises(CandidateError):
            parse_candidates("1,0,x\n")


def test_balance_factor():
    """(1 + RHO) / 4 is sqrt(2) / 4."""
    assert BALANCE_FACTOR == QuadRat(0, "1/4")
    assert BALANCE_FACTOR * 4 == ONE + RHO
