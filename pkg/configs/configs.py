"""Configuration management module."""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import dotenv_values

from core.utils.file import FileUtils


@dataclass
class Configs:
    """Environment configuration class."""

    # Numerical tolerances
    NORM_TOL: float
    MEMBERSHIP_TOL: float
    COND_LIMIT: float
    VARIETY_TOL: float
    UNIT_VECTOR_TOL: float

    # Enumeration budgets
    NILPOTENT_WORD_BUDGET: int
    TT_WORD_BUDGET: int
    REGULARITY_WORD_BUDGET: int
    MAX_LEVEL: int

    # Probe
    PROBE_WORKERS: int
    DEFAULT_SEED: int

    # Runtime
    LOG_LEVEL: str
    VERSION: str

    _instance: Optional["Configs"] = None
    _loaded_env: Optional[str] = None

    def __init__(self):
        """Initialize configuration from the active env file."""
        env = os.getenv("ACTIVE_ENV", "dev")
        if self._loaded_env == env:
            return

        env_file = FileUtils.get_file_path(f"configs/.env.{env}")
        if not os.path.exists(env_file):
            raise FileNotFoundError(f"Env file not found: {env_file}")

        values = dotenv_values(env_file)

        # Numerical tolerances
        self.NORM_TOL = float(values.get("NORM_TOL") or "1e-10")
        self.MEMBERSHIP_TOL = float(values.get("MEMBERSHIP_TOL") or "1e-9")
        self.COND_LIMIT = float(values.get("COND_LIMIT") or "1e12")
        self.VARIETY_TOL = float(values.get("VARIETY_TOL") or "1e-10")
        self.UNIT_VECTOR_TOL = float(values.get("UNIT_VECTOR_TOL") or "1e-12")

        # Enumeration budgets
        self.NILPOTENT_WORD_BUDGET = int(values.get("NILPOTENT_WORD_BUDGET") or "1000000")
        self.TT_WORD_BUDGET = int(values.get("TT_WORD_BUDGET") or "100000")
        self.REGULARITY_WORD_BUDGET = int(values.get("REGULARITY_WORD_BUDGET") or "10000")
        self.MAX_LEVEL = int(values.get("MAX_LEVEL") or "64")

        # Probe
        self.PROBE_WORKERS = int(values.get("PROBE_WORKERS") or "1")
        self.DEFAULT_SEED = int(values.get("DEFAULT_SEED") or "0")

        # Runtime
        self.LOG_LEVEL = (values.get("LOG_LEVEL") or "INFO").upper()
        self.VERSION = values.get("VERSION") or "0.1.0"

        type(self)._loaded_env = env

    def __new__(cls):
        """Get singleton instance of Configs."""
        if not cls._instance:
            cls._instance = super(Configs, cls).__new__(cls)
        return cls._instance
