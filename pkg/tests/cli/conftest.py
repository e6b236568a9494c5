"""Test fixtures for command-line tests."""

import pytest

from gridhom import FIXTURE_DIR


@pytest.fixture
def fixture_path():
    """Path of a bundled diagram as a command-line argument."""

    def path(name):
        return str(FIXTURE_DIR / f"{name}.txt")

    return path


@pytest.fixture
def link_file(tmp_path):
    """A two-component link in text grid form."""
    path = tmp_path / "link.txt"
    path.write_text("..XO\n..OX\nXO..\nOX..\n")
    return str(path)
