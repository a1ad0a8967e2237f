"""Named parameter sets loaded from YAML."""

from __future__ import annotations

import logging
from pathlib import Path

import yaml
from pydantic import BaseModel, Field

from gmr_cli.config import get_settings
from gmr_hilbert.models import GmrParams

logger = logging.getLogger(__name__)


class Preset(BaseModel):
    """One named instance family, optionally with its field size."""

    description: str = ""
    m: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    K: int = Field(..., ge=1)
    r: int = Field(..., ge=0)
    D: int = Field(default=1, ge=1)
    q: int | None = Field(default=None, ge=2)

    def params(self) -> GmrParams:
        return GmrParams(m=self.m, n=self.n, K=self.K, r=self.r, D=self.D)


def load_presets(path: Path | None = None) -> dict[str, Preset]:
    """Read presets from ``path`` (default from settings).

    A missing or malformed file is logged and yields no presets.
    """
    path = path or get_settings().presets_path
    if not path.is_file():
        logger.warning(f"Presets file not found at '{path}'. No presets available.")
        return {}

    try:
        with open(path) as f:
            data = yaml.safe_load(f)
        if not data:
            return {}
        presets = {str(name): Preset(**fields) for name, fields in data.items()}
    except (yaml.YAMLError, TypeError, ValueError, AttributeError) as e:
        logger.error(f"Failed to parse presets file '{path}': {e}")
        return {}
    logger.debug(f"Loaded {len(presets)} presets from '{path}'")
    return presets


def get_preset(name: str, path: Path | None = None) -> Preset:
    """Look up one preset.

    Raises:
        KeyError: If ``name`` is not defined in the presets file

    """
    presets = load_presets(path)
    if name not in presets:
        known = ", ".join(sorted(presets)) or "none"
        raise KeyError(f"Unknown preset '{name}' (known: {known})")
    return presets[name]
