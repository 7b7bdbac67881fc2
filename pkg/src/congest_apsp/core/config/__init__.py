from .main import ApspConfig, CongestConfig, ConfigLoadingError, GeneratorConfig, default_h
from .settings import RuntimeSettings

__all__ = ["ApspConfig", "CongestConfig", "ConfigLoadingError", "GeneratorConfig", "RuntimeSettings", "default_h"]
