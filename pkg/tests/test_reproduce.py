"""
Tests for settings and the quick reproduction run.
"""
import pytest

from sdenumerators.config import Settings, get_settings
from sdenumerators.reproduce import CheckResult, QUICK_CHECKS, run_checks


class TestSettings:
    """Tests for environment-driven settings."""

    def test_defaults(self):
        """Unset variables keep the defaults."""
        assert Settings.from_env({}) == Settings(workers=1, chunk_bits=20)

    def test_from_env(self):
        """Both variables are read."""
        settings = Settings.from_env({"SDENUM_WORKERS": "4", "SDENUM_CHUNK_BITS": "12"})
        assert (settings.workers, settings.chunk_bits) == (4, 12)

    @pytest.mark.parametrize("value", ["x", "0", "-3"])
    def test_invalid(self, value):
        """Values must be positive integers."""
        with pytest.raises(ValueError):
            Settings.from_env({"SDENUM_WORKERS": value})

    def test_with_workers(self, monkeypatch):
        """Command-line overrides win over the environment."""
        monkeypatch.setenv("SDENUM_WORKERS", "2")
        assert get_settings().workers == 2
        assert get_settings().with_workers(5).workers == 5
        assert get_settings().with_workers(None).workers == 2
        with pytest.raises(ValueError):
            get_settings().with_workers(0)


class TestReproduce:
    """Tests for run_checks."""

    def test_quick_run_passes(self):
        """Every quick check passes."""
        results = run_checks()
        assert len(results) == len(QUICK_CHECKS)
        failed = [r.to_text() for r in results if not r.passed]
        assert failed == []

    def test_raising_check_is_a_failure(self, mocker):
        """Exceptions become failed results."""
        def broken(settings):
            raise ValueError("no data")

        mocker.patch("sdenumerators.reproduce.QUICK_CHECKS", [("broken", broken)])
        results = run_checks()
        assert results == [CheckResult("broken", False, "ValueError: no data")]
        assert results[0].to_text() == "FAIL broken: ValueError: no data"
