"""
Configuration model for the command-line tool.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw.replace('_', ''))
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass
class ToolConfig:
    """Settings read from the environment (and an optional .env file)."""
    log_level: str = 'INFO'
    log_file: Optional[str] = None
    default_max: int = 1_000_000
    max_period: int = 1_000
    max_preperiod: int = 10_000
    workers: int = 1

    @classmethod
    def from_env(cls) -> 'ToolConfig':
        """Load .env and build the configuration from SGTOOL_* variables."""
        load_dotenv()
        config = cls(
            log_level=os.getenv('SGTOOL_LOG_LEVEL', 'INFO'),
            log_file=os.getenv('SGTOOL_LOG_FILE') or None,
            default_max=_int_setting('SGTOOL_MAX', 1_000_000),
            max_period=_int_setting('SGTOOL_MAX_PERIOD', 1_000),
            max_preperiod=_int_setting('SGTOOL_MAX_PREPERIOD', 10_000),
            workers=_int_setting('SGTOOL_WORKERS', 1),
        )
        if config.workers < 1:
            raise ValueError(f"SGTOOL_WORKERS must be >= 1, got {config.workers}")
        return config
