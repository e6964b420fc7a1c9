"""
Application configuration using Pydantic Settings.

All configuration loaded from environment variables with validation.
Every field has a default so the library and CLI run without a .env file.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator
from typing import Literal


class Settings(BaseSettings):
    """Application settings with validation."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Application
    app_name: str = Field(default="twisted-codes", description="Application name")
    app_env: Literal["development", "production", "test"] = Field(
        default="development",
        description="Environment"
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Log level"
    )

    # Finite fields
    max_field_order: int = Field(
        default=2**20,
        ge=2,
        le=2**24,
        description="Largest field order accepted by field_create"
    )
    sqrt_table_limit: int = Field(
        default=2**10,
        ge=2,
        description="Largest odd field order whose square roots come from a table"
    )

    # Enumeration
    enumeration_limit: int = Field(
        default=2**24,
        ge=1,
        description="Largest number of messages q^k enumerated by brute force"
    )
    enumeration_chunk: int = Field(
        default=2**14,
        ge=1,
        description="Messages per vectorised enumeration block"
    )
    subset_domain_limit: int = Field(
        default=64,
        ge=1,
        description="Largest domain accepted by the subset-sum DP"
    )
    refute_budget: int = Field(
        default=2_000_000,
        ge=1,
        description="Gram classes the self-dual refutation may check"
    )

    # Output
    json_indent: int = Field(default=2, ge=0, le=8)

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lower-case level names from the environment."""
        if isinstance(v, str):
            return v.upper()
        return v


# Global settings instance (lazy loaded)
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get settings instance (lazy loaded)."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached instance so the next get_settings() rereads the environment."""
    global _settings
    _settings = None
