"""Configuration settings for the Morse-Novikov toolkit."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from MNK_* environment variables and an optional .env file."""

    model_config = SettingsConfigDict(
        env_prefix="MNK_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Reproducibility
    seed: int = Field(default=20240611, description="Seed for randomized suites and generators")

    # Report Configuration
    alpha_digits: int = Field(
        default=12, ge=1, le=200, description="Decimal places of the Lee eigenvalue"
    )
    output_format: Literal["json", "markdown"] = Field(
        default="json", description="Report document format"
    )

    # Logging Configuration
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level"
    )

    # Execution Limits
    batch_concurrency: int = Field(default=4, ge=1, description="Concurrent jobs in a batch")
    kronecker_max_degree: int = Field(
        default=8, ge=1, description="Largest degree handed to Kronecker factorization"
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
