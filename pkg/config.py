"""
Runtime configuration

Settings come from environment variables, optionally through a .env file.
"""

import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


@dataclass(frozen=True)
class Settings:
    threads: int
    exhaustive_cap: int
    small_n: int
    verbose: bool
    api_max_n: int


def _int_from_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """
    Read settings from the environment

    Environment variables:
        - POPSTACK_THREADS (default: available CPUs)
        - POPSTACK_EXHAUSTIVE_CAP (default: 11)
        - POPSTACK_SMALL_N (default: 64)
        - POPSTACK_VERBOSE (default: off)
        - POPSTACK_API_MAX_N (default: 8)
    """
    return Settings(
        threads=_int_from_env("POPSTACK_THREADS", os.cpu_count() or 1),
        exhaustive_cap=_int_from_env("POPSTACK_EXHAUSTIVE_CAP", 11),
        small_n=_int_from_env("POPSTACK_SMALL_N", 64),
        verbose=os.getenv("POPSTACK_VERBOSE", "").strip().lower() in ("1", "true", "yes"),
        api_max_n=_int_from_env("POPSTACK_API_MAX_N", 8),
    )


def progress(message: str):
    """Status line on stderr when POPSTACK_VERBOSE is set"""
    if load_settings().verbose:
        print(message, file=sys.stderr)
