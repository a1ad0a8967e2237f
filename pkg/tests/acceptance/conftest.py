"""Pytest configuration and fixtures for acceptance tests.

This module provides:
- Core fixtures (config, workflow context)
- Step definition imports from the steps/ directory

Step definitions are organized by domain:
- steps/series_steps.py: Series engines, tableau counts, identities
- steps/estimate_steps.py: Mirath estimates and the r-sweep
- steps/verification_steps.py: GF(q) Macaulay rank checks
- steps/cli_steps.py: Runs of the gmr command
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import Any

import pytest

from gmr_cli.config import get_settings
from gmr_hilbert.config import get_hilbert_settings
from tests.acceptance.config import AcceptanceConfig, load_acceptance_config

# =============================================================================
# Import all step definitions - makes them available to pytest-bdd
# =============================================================================
from tests.acceptance.steps.cli_steps import *  # noqa: F401, F403
from tests.acceptance.steps.estimate_steps import *  # noqa: F401, F403
from tests.acceptance.steps.series_steps import *  # noqa: F401, F403
from tests.acceptance.steps.verification_steps import *  # noqa: F401, F403

# =============================================================================
# Core Fixtures
# =============================================================================


@pytest.fixture(scope="session")
def acceptance_config() -> AcceptanceConfig:
    """Load acceptance configuration once per session.

    Configuration is loaded from environment variables with GMR_ACC_ prefix.
    """
    return load_acceptance_config()


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Drop cached library and CLI settings around every scenario."""
    get_settings.cache_clear()
    get_hilbert_settings.cache_clear()
    yield
    get_settings.cache_clear()
    get_hilbert_settings.cache_clear()


# =============================================================================
# Test Context Fixture
# =============================================================================


@pytest.fixture
def workflow_context() -> dict[str, Any]:
    """Mutable context for sharing state between BDD steps within a scenario.

    Steps add keys as they go:
    - params, preset: the instance family under test
    - report, rows, records: results of the When steps
    - failures: points or instances that disagree with the prediction
    - exit_code, stdout: result of a command-line run
    """
    return {
        "params": None,
        "preset": None,
        "report": None,
        "rows": None,
        "records": None,
        "failures": None,
        "exit_code": None,
        "stdout": None,
    }
