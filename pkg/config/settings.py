"""
Configuration settings for argsum.
Uses pydantic-settings for environment variable management.
"""
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.resources import DEFAULT_STOPWORDS, DEMO_LEXICON, DEMO_TOPOI


class ResourceSettings(BaseSettings):
    """Lexicon, topos base and stopword files."""

    model_config = SettingsConfigDict(env_prefix="ARGSUM_")

    lexicon: Path = Field(default=DEMO_LEXICON, description="Connective lexicon file")
    topoi: Path = Field(default=DEMO_TOPOI, description="Topos base file")
    stopwords: Path = Field(default=DEFAULT_STOPWORDS, description="Stopword list")


class SummarySettings(BaseSettings):
    """Summary generation defaults."""

    model_config = SettingsConfigDict(env_prefix="ARGSUM_SUMMARY_")

    ratio: float = Field(default=0.3, gt=0, le=1)
    alpha: float = Field(default=0.5, gt=0, le=1, description="Keyword threshold")
    output_format: Literal["text", "json"] = Field(default="text")


class Settings(BaseSettings):
    """Main configuration aggregating all settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Sub-configurations
    resources: ResourceSettings = Field(default_factory=ResourceSettings)
    summary: SummarySettings = Field(default_factory=SummarySettings)

    # Application settings
    debug: bool = Field(default=False)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")
