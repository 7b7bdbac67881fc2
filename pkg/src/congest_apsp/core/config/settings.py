from __future__ import annotations

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class RuntimeSettings(BaseSettings):
    model_config = {
        "env_prefix": "CONGEST_APSP_",
        "case_sensitive": False,
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }

    config_file: Path = Field(default=Path("congest.yaml"), description="Project configuration file")
    max_retries: int | None = Field(default=None, description="Override for the G(n, p) reconnection attempts")
