class CongestError(Exception):
    """Base class for all congest-apsp errors."""


class ConfigError(CongestError):
    """Raised when a resolved run configuration is not usable for the given graph."""
