"""Configuration management for congest-apsp."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Self

import yaml
from pydantic import BaseModel, Field, ValidationError
from rich.console import Console
from rich.markup import escape

from congest_apsp.utils.errors import ConfigError, CongestError

from .settings import RuntimeSettings

console = Console(stderr=True)


def default_h(n: int) -> int:
    """⌈√(n·⌈log₂ n⌉)⌉ clamped to [1, n-1]."""
    if n < 2:
        return 1
    return max(1, min(n - 1, math.ceil(math.sqrt(n * math.ceil(math.log2(n))))))


class ApspConfig(BaseModel):
    """Parameters of one APSP run."""

    h: int | None = None
    w_max: int | None = None
    trace_path: Path | None = None
    audit_path: Path | None = None
    verify: bool = False

    def resolve_h(self, n: int) -> int:
        h = default_h(n) if self.h is None else self.h
        if not 1 <= h <= n - 1:
            raise ConfigError(f"h must lie in [1, {n - 1}] for n={n}, got {h}")
        return h


class GeneratorConfig(BaseModel):
    """Defaults for `gen` and `--gen`."""

    p: float = 0.3
    wmax: int | None = None
    directed: bool = False
    max_retries: int = 100

    def resolve_wmax(self, n: int) -> int:
        return self.wmax if self.wmax is not None else n * n


class ConfigLoadingError(CongestError):
    """Error loading configuration."""


class CongestConfig(BaseModel):
    """Project-level configuration, optionally read from congest.yaml."""

    seed: int = 0
    apsp: ApspConfig = Field(default_factory=ApspConfig)
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)

    @classmethod
    def get_config_path(cls) -> Path:
        """Get the path to the configuration file."""
        return Path.cwd() / RuntimeSettings().config_file

    @classmethod
    def load_config(cls, path: Path | None = None) -> Self:
        """Load configuration; a missing file means defaults."""
        settings = RuntimeSettings()
        config_path = path or cls.get_config_path()

        if not config_path.exists():
            config = cls()
        else:
            try:
                with open(config_path, encoding="utf-8") as f:
                    config_data = yaml.safe_load(f) or {}
                config = cls(**config_data)
            except (OSError, ValueError, TypeError, ValidationError, yaml.YAMLError) as e:
                console.print(f"[red]{e.__class__.__name__} loading configuration:[/red] {escape(str(e))}")
                raise ConfigLoadingError(e) from e

        if settings.max_retries is not None:
            config.generator.max_retries = settings.max_retries
        return config
