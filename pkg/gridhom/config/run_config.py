from __future__ import annotations

import os
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from ..common import OutputFormat
from .constants import JOBS_ENV_VAR
from .window import Window

COMMANDS = ("validate", "homology", "connect", "verify-kunneth", "legendrian", "render")


def default_jobs() -> int:
    """Worker count from the environment, falling back to one."""
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV_VAR} must be >= 1, got {jobs}")
    return jobs


class RunConfig(BaseModel):
    """
    Settings for a single command-line run.

    Attributes:
        command: Sub-command name.
        inputs: Input diagram files (text grid or JSON).
        output: Output path for commands that write a diagram.
        window: Optional bigrading window restricting homology checks.
        depth: Optional probe depth for module-structure computations.
        jobs: Worker count for parallel slice and generator work.
        output_format: ``text`` or ``json``.
        seed: Seed for sampled checks at large scale.
        sample: Fraction of generators or slices to check when sampling.
        progress: Show progress bars on long checks.
    """

    command: str = Field(..., description="Sub-command name")
    inputs: list[Path] = Field(default_factory=list, description="Input diagram files")
    output: Path | None = Field(default=None, description="Output path")
    window: Window | None = Field(default=None, description="Bigrading window")
    depth: int | None = Field(default=None, ge=1, description="Probe depth")
    jobs: int = Field(default_factory=default_jobs, ge=1, description="Worker count")
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT, description="Report format"
    )
    seed: int = Field(default=0, description="Seed for sampled checks")
    sample: float | None = Field(
        default=None, gt=0.0, le=1.0, description="Sampled fraction of work"
    )
    progress: bool = Field(default=False, description="Show progress bars")

    @field_validator("command")
    @classmethod
    def validate_command(cls, v: str) -> str:
        """Ensure the command is known."""
        if v not in COMMANDS:
            raise ValueError(f"command must be one of {', '.join(COMMANDS)}")
        return v
