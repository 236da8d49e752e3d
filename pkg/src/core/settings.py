"""
Runtime settings read from environment variables.

Values are read on every get_settings() call so tests and shells can change
them without reloading modules. Command-line flags override them.
"""
import os
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from src.core.exceptions import ConfigurationError


class Settings(BaseModel):
    key_bits: int = Field(1024, ge=64, description="Default modulus length for keygen and demo")
    compare_bits: int = Field(160, ge=1, le=0xFFFF, description="Default number of low-order bits compared")
    transform: str = Field("sha1-low", description="Default transformation name")
    log_dir: Path = Field(Path("logs"), description="Directory of the log file")
    log_level: str = Field("WARNING", description="Console log level")
    reports_dir: Path = Field(Path("reports"), description="Where sweep reports are written")
    sweep_trials: int = Field(100, ge=0, description="Default forgeries per sweep row")


def get_settings() -> Settings:
    """Build Settings from LBF_* environment variables."""
    try:
        return Settings(
            key_bits=int(os.getenv("LBF_KEY_BITS", "1024")),
            compare_bits=int(os.getenv("LBF_COMPARE_BITS", "160")),
            transform=os.getenv("LBF_TRANSFORM", "sha1-low"),
            log_dir=Path(os.getenv("LBF_LOG_DIR", "logs")),
            log_level=os.getenv("LBF_LOG_LEVEL", "WARNING").upper(),
            reports_dir=Path(os.getenv("LBF_REPORTS_DIR", "reports")),
            sweep_trials=int(os.getenv("LBF_SWEEP_TRIALS", "100")),
        )
    except (ValueError, ValidationError) as e:
        raise ConfigurationError(f"Invalid LBF_* environment setting: {e}") from e
