"""
Runtime settings read from the environment (and a local .env file).

QTREP_CACHE                path of the structure-constant cache (unset: in-memory only)
QTREP_MAX_SIZE             default truncation bound for table commands (default 4)
QTREP_THREADS              worker threads for table fills (default 1)
QTREP_OUTPUT               table | json (default table)
QTREP_LOG_LEVEL            logging level (default WARNING)
QTREP_STRICT_CALIBRATION   refuse extrapolated LR exponent classes (default false)
"""

import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator

load_dotenv()

CACHE_PATH = os.getenv("QTREP_CACHE") or None
MAX_SIZE = int(os.getenv("QTREP_MAX_SIZE", "4"))
NUM_THREADS = int(os.getenv("QTREP_THREADS", "1"))
OUTPUT = os.getenv("QTREP_OUTPUT", "table")
LOG_LEVEL = os.getenv("QTREP_LOG_LEVEL", "WARNING").upper()
STRICT_CALIBRATION = os.getenv("QTREP_STRICT_CALIBRATION", "false").lower() in ("1", "true", "yes")

# desk-scale hard limits
MAX_TRUNCATION = 6
MAX_LR_DEGREE = 8
MAX_ORACLE_DEGREE = 4
MAX_ORACLE_RANK = 6
MAX_DIAGRAM_NODES = 6


class Config(BaseModel):
    cache_path: Optional[str] = CACHE_PATH
    max_size: int = MAX_SIZE
    num_threads: int = NUM_THREADS
    output: Literal["table", "json"] = "json" if OUTPUT == "json" else "table"
    strict_calibration: bool = STRICT_CALIBRATION

    @field_validator("max_size")
    @classmethod
    def check_max_size(cls, v: int) -> int:
        if v < 0 or v > MAX_TRUNCATION:
            raise ValueError(f"truncation bound must lie in 0..{MAX_TRUNCATION}, got {v}")
        return v

    @field_validator("num_threads")
    @classmethod
    def check_num_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"need at least one worker thread, got {v}")
        return v


def get_config(**overrides) -> Config:
    """Config from the environment, with explicit (non-None) overrides applied."""
    values = {k: v for k, v in overrides.items() if v is not None}
    if os.getenv("QTREP_CACHE"):
        values["cache_path"] = os.getenv("QTREP_CACHE")
    return Config(**values)
