"""Unit tests for gmr_cli configuration."""

from __future__ import annotations

from pathlib import Path

import pytest

from gmr_cli.config import PACKAGED_PRESETS, Settings, get_settings

# =============================================================================
# Test: Settings Fields
# =============================================================================


def test_settings_defaults(monkeypatch: pytest.MonkeyPatch):
    """Test the documented defaults."""
    for name in ("OUTPUT_FORMAT", "PRESETS_PATH", "DEFAULT_SEED"):
        monkeypatch.delenv(f"GMR_CLI_{name}", raising=False)
    settings = Settings(_env_file=None)
    assert settings.output_format == "table"
    assert settings.presets_path == PACKAGED_PRESETS
    assert settings.default_seed == 0


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    """Test that GMR_CLI_ variables override the defaults."""
    monkeypatch.setenv("GMR_CLI_OUTPUT_FORMAT", "json")
    monkeypatch.setenv("GMR_CLI_PRESETS_PATH", str(tmp_path / "p.yaml"))
    monkeypatch.setenv("GMR_CLI_DEFAULT_SEED", "7")
    settings = Settings(_env_file=None)
    assert settings.output_format == "json"
    assert settings.presets_path == tmp_path / "p.yaml"
    assert settings.default_seed == 7


def test_settings_rejects_unknown_format(monkeypatch: pytest.MonkeyPatch):
    """Test that only json, csv and table are accepted."""
    monkeypatch.setenv("GMR_CLI_OUTPUT_FORMAT", "xml")
    with pytest.raises(ValueError):
        Settings(_env_file=None)


def test_packaged_presets_file_exists():
    assert PACKAGED_PRESETS.is_file()


# =============================================================================
# Test: get_settings Caching
# =============================================================================


def test_get_settings_is_cached():
    """Test that get_settings returns the same cached instance."""
    assert get_settings() is get_settings()
    assert isinstance(get_settings(), Settings)
