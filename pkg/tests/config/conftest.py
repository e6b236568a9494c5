"""Test fixtures for config subsystem tests."""

import pytest

from gridhom.config import JOBS_ENV_VAR


@pytest.fixture
def clean_jobs_env(monkeypatch):
    """Remove any worker count from the environment."""
    monkeypatch.delenv(JOBS_ENV_VAR, raising=False)
    return monkeypatch
