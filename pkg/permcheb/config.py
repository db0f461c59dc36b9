"""Engine configuration and settings."""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Package version - single source of truth
VERSION = "1.0.0"


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix ``PERMCHEB_``)."""

    model_config = SettingsConfigDict(
        env_prefix="PERMCHEB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "permcheb"
    debug: bool = False
    log_level: str = "INFO"

    # Resource caps for the brute-force oracle
    max_n: int = Field(default=12, ge=0)
    max_list_n: int = Field(default=10, ge=0)

    # Verification
    default_order: int = Field(default=8, ge=0)
    verify_workers: int = Field(default=1, ge=1)
    oracle_workers: int = Field(default=1, ge=1)

    # File locations
    report_dir: Path = Path("./data/reports")
    rules_dir: Path = Path("./data/rules")

    def ensure_directories(self) -> None:
        """Create the report directory if it doesn't exist."""
        self.report_dir.mkdir(parents=True, exist_ok=True)


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Singleton Settings instance
    """
    return Settings()
