from __future__ import annotations

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class HilbertSettings(BaseSettings):
    """Library-wide settings for series engines, estimator and verifier."""

    model_config = SettingsConfigDict(
        env_prefix="GMR_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    logging_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"

    # Hilbert series
    default_order: int = Field(default=32, ge=1)
    order_cap: int = Field(default=512, ge=1)

    # Combinatorics
    enumeration_cap: int = Field(default=10**7, ge=1)

    # Finite-field verification
    max_matrix_entries: int = Field(default=25_000_000, ge=1)
    trial_workers: int = Field(default=1, ge=1)


@lru_cache
def get_hilbert_settings() -> HilbertSettings:
    """Get cached settings instance."""
    return HilbertSettings()
