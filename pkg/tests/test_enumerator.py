"""
Unit tests for exact enumerators and their derivatives.
"""
import json
from importlib import resources

import numpy as np
import pytest

from sdenumerators.codes import LinearCode, builtin_code, weight_distribution
from sdenumerators.enumerator import (
    Derivative,
    ExactEnumerator,
    check_halves,
    check_nonnegative,
    collapse,
    derivative,
    derivative_by_steps,
    derivative_step,
    exact_enumerator,
    format_derivative,
    parse_derivative,
)
from sdenumerators.errors import CodeFormatError, InputError, ResourceLimitError
from sdenumerators.quadring import RHO, ZERO, format_rho, rho_pow
from sdenumerators.transform import SpectralVector, is_eigenvector_one


class TestExactEnumerator:
    """Tests for the codeword label lists."""

    def test_support(self, e8, small_blocks):
        """Labels are sorted and hold every codeword."""
        enumerator = exact_enumerator(e8, small_blocks)
        assert len(enumerator) == 16
        assert 0b11110000 in enumerator
        assert 0b11111111 in enumerator
        assert 0b10000000 not in enumerator
        assert list(enumerator.labels) == sorted(enumerator.support)

    def test_dense_vector(self, repetition2):
        """The repetition code is [1, 0, 0, 1]."""
        vector = exact_enumerator(repetition2).to_vector()
        assert vector == SpectralVector.from_integers([1, 0, 0, 1])

    def test_limits(self):
        """Huge enumerators are refused before any work is done."""
        with pytest.raises(ResourceLimitError):
            ExactEnumerator(30, np.array([0], dtype=np.uint64)).to_vector()
        wide = LinearCode(58, tuple(1 << i for i in range(29)))
        with pytest.raises(ResourceLimitError):
            exact_enumerator(wide)
        with pytest.raises(ResourceLimitError):
            derivative(wide, 57)


class TestDerivative:
    """Tests for derivatives computed from the codewords."""

    def test_order_zero_is_the_enumerator(self, e8, c2x4):
        """No prefix to sum over."""
        for code in (e8, c2x4):
            assert derivative(code, 0).vector == exact_enumerator(code).to_vector()

    def test_repetition_code(self, repetition2):
        """Order 1 of {00, 11} is [1, RHO]."""
        assert derivative(repetition2, 1).vector == SpectralVector.from_values([1, RHO])
        assert derivative(repetition2, 2).scalar == 1 + rho_pow(2)

    def test_scalar_is_weight_sum(self, e8, c2x4, golay24):
        """The order-n derivative is sum A_k RHO**k."""
        for code in (e8, c2x4, golay24):
            dist = weight_distribution(code)
            expected = sum((rho_pow(k) * c for k, c in dist.nonzero()), ZERO)
            assert derivative(code, code.n).scalar == expected

    def test_golay_order_19(self, golay_d19):
        """Published values of the Golay derivative."""
        assert len(golay_d19) == 32
        assert format_rho(golay_d19[0]) == "-1167936*p + 483776"
        assert format_rho(golay_d19[1]) == "1202240*p - 497984"
        assert format_rho(golay_d19[3]) == "-1180608*p + 489024"
        assert format_rho(golay_d19[31]) == "7081024*p - 2933056"

    def test_golay_order_19_matches_listing(self, golay_d19):
        """The formatted derivative is the shipped listing, byte for byte."""
        listing = resources.files("sdenumerators.data").joinpath("golden_golay24.txt").read_text()
        assert format_derivative(golay_d19) == listing

    def test_threads_and_blocks(self, golay24, golay_d19, small_blocks):
        """Block layout and worker count do not change the result."""
        assert derivative(golay24, 19, small_blocks) == golay_d19

    @pytest.mark.parametrize("name", ["e8", "c2x4"])
    def test_steps_match_direct(self, name):
        """Stepping up one order at a time agrees with direct computation."""
        code = builtin_code(name)
        d = derivative(code, 0)
        for t in range(1, code.n + 1):
            d = derivative_step(d)
            assert d == derivative(code, t)

    def test_by_steps(self, golay24, golay_d19):
        """The stepped Golay derivative starts from order 8."""
        assert derivative_by_steps(golay24, 19) == golay_d19

    def test_eigenvector(self, e8, golay_d19):
        """Derivatives of self-dual codes are fixed by K^[n - t]."""
        assert is_eigenvector_one(golay_d19.vector)
        for t in range(9):
            assert is_eigenvector_one(derivative(e8, t).vector)

    def test_order_range(self, e8):
        """Orders lie in 0..n."""
        with pytest.raises(InputError):
            derivative(e8, 9)
        with pytest.raises(InputError):
            derivative(e8, -1)
        with pytest.raises(InputError):
            derivative_step(derivative(e8, 8))
        with pytest.raises(InputError):
            derivative(e8, 4).scalar

    def test_resource_limit(self):
        """qr48 at order 10 would need 2**38 entries."""
        with pytest.raises(ResourceLimitError):
            derivative(builtin_code("qr48"), 10)

    def test_wrong_vector_length(self):
        """The vector length must match the order."""
        with pytest.raises(CodeFormatError):
            Derivative(8, 6, SpectralVector.from_integers([1, 0]))


class TestDerivativeChecks:
    """Tests for the structural checks on derivatives."""

    def test_halves(self, e8, c2x4, golay_d19):
        """The second half mirrors the conjugated first half."""
        assert check_halves(golay_d19)
        for code in (e8, c2x4):
            for t in range(code.n + 1):
                assert check_halves(derivative(code, t))

    def test_halves_detect_perturbation(self, golay_d19):
        """Changing one entry breaks the symmetry."""
        broken = Derivative(24, 19, golay_d19.vector.with_entry(0, golay_d19[0] + 1))
        assert not check_halves(broken)

    def test_collapse(self, golay24, golay_d19):
        """Collapsing any order gives the scalar derivative."""
        assert collapse(golay_d19) == derivative(golay24, 24).scalar

    def test_nonnegative(self, golay_d19):
        """Entries are nonnegative reals."""
        assert check_nonnegative(golay_d19)
        negative = Derivative(24, 19, golay_d19.vector.with_entry(7, -RHO))
        assert not check_nonnegative(negative)


class TestSerialisation:
    """Tests for the listing formats."""

    def test_structured(self, golay_d19):
        """JSON records carry the rho-basis coordinates."""
        text = format_derivative(golay_d19, "structured")
        record = json.loads(text)
        assert (record["n"], record["t"]) == (24, 19)
        assert record["entries"][0] == {"index": 0, "const": "483776", "rho": "-1167936"}
        assert parse_derivative(text) == golay_d19

    def test_paper_round_trip(self, golay_d19):
        """The text listing reads back."""
        assert parse_derivative(format_derivative(golay_d19)) == golay_d19

    def test_unknown_format(self, golay_d19):
        """Only two formats exist."""
        with pytest.raises(InputError):
            format_derivative(golay_d19, "csv")

    @pytest.mark.parametrize("text", [
        "",
        "0 p\n",
        "# n=2 t=1\n0 1\n",
        "# n=2 t=1\n0 1\n1 q\n",
        "# n=2\n0 1\n1 p\n",
        '{"n": 2, "t": 1, "entries": []}',
    ])
    def test_malformed(self, text):
        """Missing headers, entries or values are reported."""
        with pytest.raises(CodeFormatError):
            parse_derivative(text)
