"""Shared fixtures for gmr_hilbert unit tests."""

from __future__ import annotations

from collections.abc import Iterator

import pytest

from gmr_hilbert.config import get_hilbert_settings
from gmr_hilbert.models import GmrParams


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Drop cached settings before and after every test."""
    get_hilbert_settings.cache_clear()
    yield
    get_hilbert_settings.cache_clear()


@pytest.fixture
def large_prime() -> int:
    """Prime for which random instances are generic with overwhelming probability."""
    return 10007


@pytest.fixture
def small_order_cap(monkeypatch: pytest.MonkeyPatch) -> int:
    """Limit order escalation so non-terminating series fail fast."""
    monkeypatch.setenv("GMR_ORDER_CAP", "64")
    get_hilbert_settings.cache_clear()
    return 64


@pytest.fixture
def mismatch_params() -> GmrParams:
    """(5, 5, 5, 3): the formula predicts 0 at t^1 for dc = 3, instances give 50."""
    return GmrParams(m=5, n=5, K=5, r=3)


@pytest.fixture
def proven_params() -> GmrParams:
    """Small proven-region family, K = m(n - r)."""
    return GmrParams(m=3, n=3, K=6, r=1)


@pytest.fixture
def level_one_params() -> GmrParams:
    """Mirath security level I."""
    return GmrParams(m=16, n=16, K=143, r=4)
