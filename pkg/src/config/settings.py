"""Configuration settings for GrayGreed."""

from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SweepConfig(BaseModel):
    """Brute-force sweep settings."""

    workers: int = Field(
        default=1,
        description="Worker processes used by generator sweeps"
    )

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v):
        """Validate worker count."""
        if v < 1:
            raise ValueError("workers must be at least 1")
        return v


class GreedyConfig(BaseModel):
    """Greedy algorithm settings."""

    move_order: str = Field(
        default="one-first",
        description="Candidate transposition order"
    )

    @field_validator("move_order")
    @classmethod
    def validate_move_order(cls, v):
        """Validate move order."""
        if v not in ["one-first", "zero-first"]:
            raise ValueError("move_order must be one of: one-first, zero-first")
        return v


class LoggingConfig(BaseModel):
    """Logging configuration settings."""

    level: str = Field(default="WARNING", description="Logging level")
    format: str = Field(default="text", description="Log format")
    output: str = Field(default="stderr", description="Log output")

    @field_validator("level")
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_log_format(cls, v):
        """Validate log format."""
        if v not in ["json", "text"]:
            raise ValueError("format must be one of: json, text")
        return v

    @field_validator("output")
    @classmethod
    def validate_log_output(cls, v):
        """Validate log output."""
        if v not in ["stderr", "stdout"]:
            raise ValueError("output must be one of: stderr, stdout")
        return v


class Settings(BaseSettings):
    """Main application settings."""

    max_sweep: int = Field(
        default=2_000_000,
        description="Largest language a brute-force sweep may enumerate"
    )
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    greedy: GreedyConfig = Field(default_factory=GreedyConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    config_file: Optional[Path] = Field(
        default=None,
        description="Configuration file path"
    )

    model_config = SettingsConfigDict(
        env_prefix="GRAYGREED_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("max_sweep")
    @classmethod
    def validate_max_sweep(cls, v):
        """Validate sweep bound."""
        if v < 1:
            raise ValueError("max_sweep must be positive")
        return v

    def __init__(self, **kwargs):
        """Initialize settings with config file support."""
        config_file = kwargs.get("config_file")
        if config_file and Path(config_file).exists():
            with open(config_file, "r", encoding="utf-8") as f:
                config_data = yaml.safe_load(f) or {}
            kwargs = {**config_data, **kwargs}

        super().__init__(**kwargs)


# Global settings instance
_settings: Optional[Settings] = None


def load_settings(config_file: Optional[Path] = None) -> Settings:
    """Build settings, reading ``config_file`` when given."""
    if config_file is None:
        return Settings()
    return Settings(config_file=config_file)


def get_settings() -> Settings:
    """Get global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Set global settings instance."""
    global _settings
    _settings = settings
