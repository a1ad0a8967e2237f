from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGED_PRESETS = Path(__file__).parent / "presets" / "mirath.yaml"


class Settings(BaseSettings):
    """gmr command-line settings."""

    model_config = SettingsConfigDict(
        env_prefix="GMR_CLI_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Output
    output_format: Literal["json", "csv", "table"] = "table"

    # Parameter presets (YAML)
    presets_path: Path = PACKAGED_PRESETS

    # Randomness
    default_seed: int = 0


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
