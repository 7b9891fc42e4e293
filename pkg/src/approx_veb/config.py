"""Application settings loaded from ``APPROX_VEB_*`` environment variables."""

from __future__ import annotations

import math

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide defaults.

    Values are read once at import time.  The word size in particular is
    fixed for the lifetime of every structure built from it.
    """

    model_config = SettingsConfigDict(env_prefix="APPROX_VEB_", extra="ignore")

    word_bits: int = 64
    log_level: str = "WARNING"
    default_epsilon: str = "1"
    default_hull_delta: float = 2 * math.pi / 1024
    hull_coverage_factor: float = 4.0
    bench_seed: int = 0

    @field_validator("word_bits")
    @classmethod
    def _check_word_bits(cls, value: int) -> int:
        if not 8 <= value <= 64 or value & (value - 1):
            raise ValueError("APPROX_VEB_WORD_BITS must be a power of two in [8, 64]")
        return value


settings = Settings()
