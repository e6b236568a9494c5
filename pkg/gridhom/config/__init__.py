from .constants import DEFAULT_PROBE_PADDING, JOBS_ENV_VAR, MAX_FULL_STATES, WORD_BITS
from .run_config import COMMANDS, RunConfig, default_jobs
from .window import Window

__all__ = [
    "COMMANDS",
    "DEFAULT_PROBE_PADDING",
    "JOBS_ENV_VAR",
    "MAX_FULL_STATES",
    "RunConfig",
    "WORD_BITS",
    "Window",
    "default_jobs",
]
