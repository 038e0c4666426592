# app/config/settings.py
import os
from dotenv import load_dotenv

from app.utils.errors import ConfigError

load_dotenv()


def _int(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}", code="INVALID_CONFIG")
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}", code="INVALID_CONFIG")
    return value


def _float(name: str, default: float) -> float:
    raw = os.getenv(name, str(default))
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}", code="INVALID_CONFIG")
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}", code="INVALID_CONFIG")
    return value


LOG_LEVEL = os.getenv("CHT_LOG_LEVEL", "WARNING").upper()

# classification
PRECISION_BITS = _int("CHT_PRECISION_BITS", 64)
PRECISION_CAP = _int("CHT_PRECISION_CAP", 512)

# prover
BUDGET = _int("CHT_BUDGET", 1_000_000)
MAX_DEPTH = _int("CHT_MAX_DEPTH", 40)
REDUCTION_DEPTH = _int("CHT_REDUCTION_DEPTH", 2)
JOBS = _int("CHT_JOBS", 1)

# enumeration
N2_CAP = _int("CHT_N2_CAP", 1000)

# matrix oracle
ORACLE_STEPS = _int("CHT_ORACLE_STEPS", 10_000)
ORACLE_BISECT = _int("CHT_ORACLE_BISECT", 60)
ORACLE_TOL = _float("CHT_ORACLE_TOL", 1e-9)
