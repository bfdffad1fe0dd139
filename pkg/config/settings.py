"""
Configuration settings for the graph-spectra toolkit.
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file (for local development)
load_dotenv()


def _int_setting(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _bool_setting(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Corpus Configuration
# graph6 corpora for census orders beyond the built-in generator (graph8c.g6, graph9c.g6)
CORPUS_DIR = os.getenv("GRAPH_SPECTRA_CORPUS_DIR", "corpus")

# Property Suite Configuration
DEFAULT_SEED = _int_setting("GRAPH_SPECTRA_SEED", "20240917")
DEFAULT_INSTANCES = _int_setting("GRAPH_SPECTRA_INSTANCES", "100")
NUMERIC_TOLERANCE = float(os.getenv("GRAPH_SPECTRA_NUMERIC_TOL", "1e-8"))

# Census Configuration
CENSUS_JOBS = _int_setting("GRAPH_SPECTRA_JOBS", "1")
BUILTIN_MAX_ORDER = _int_setting("GRAPH_SPECTRA_BUILTIN_MAX_ORDER", "7")
CANONICAL_MAX_ORDER = _int_setting("GRAPH_SPECTRA_CANONICAL_MAX_ORDER", "12")

# Logging Configuration
LOG_LEVEL = os.getenv("GRAPH_SPECTRA_LOG_LEVEL", "WARNING").upper()
LOG_TO_FILE = _bool_setting("GRAPH_SPECTRA_LOG_TO_FILE", "false")

# Validate settings
if DEFAULT_INSTANCES < 1:
    raise ValueError(
        "GRAPH_SPECTRA_INSTANCES must be positive. Please set it to the number of "
        "random instances each property suite should draw."
    )

if CENSUS_JOBS < 1:
    raise ValueError("GRAPH_SPECTRA_JOBS must be at least 1.")

if not 1 <= BUILTIN_MAX_ORDER <= 7:
    raise ValueError(
        "GRAPH_SPECTRA_BUILTIN_MAX_ORDER must lie in 1..7; larger orders need an "
        "ingested graph6 corpus (see GRAPH_SPECTRA_CORPUS_DIR)."
    )

if NUMERIC_TOLERANCE <= 0:
    raise ValueError("GRAPH_SPECTRA_NUMERIC_TOL must be positive.")

if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ValueError(f"GRAPH_SPECTRA_LOG_LEVEL has unknown level {LOG_LEVEL!r}.")
