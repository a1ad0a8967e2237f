"""Shared fixtures for gmr_cli tests."""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import pytest

from gmr_cli.config import get_settings
from gmr_hilbert.config import get_hilbert_settings


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Drop cached CLI and library settings around every test."""
    get_settings.cache_clear()
    get_hilbert_settings.cache_clear()
    yield
    get_settings.cache_clear()
    get_hilbert_settings.cache_clear()


@pytest.fixture
def large_prime() -> int:
    """Prime for which random instances are generic with overwhelming probability."""
    return 10007


@pytest.fixture
def presets_file(tmp_path: Path) -> Path:
    """A presets file with one small family."""
    path = tmp_path / "presets.yaml"
    path.write_text(
        "small:\n"
        "  description: Small proven family\n"
        "  m: 3\n"
        "  n: 3\n"
        "  K: 6\n"
        "  r: 1\n"
        "  q: 31\n"
    )
    return path


@pytest.fixture
def small_order_cap(monkeypatch: pytest.MonkeyPatch) -> int:
    """Limit order escalation so non-terminating series fail fast."""
    monkeypatch.setenv("GMR_ORDER_CAP", "64")
    get_hilbert_settings.cache_clear()
    return 64
