# Extra Alexander levels probed below the generator range by default
DEFAULT_PROBE_PADDING = 4
# Environment variable supplying the default worker count
JOBS_ENV_VAR = "GRIDHOM_JOBS"
# Bits per packed matrix word
WORD_BITS = 64
# Largest state count for which checks run exhaustively
MAX_FULL_STATES = 40_320
