"""congest-apsp: CONGEST-model simulator for deterministic exact weighted APSP."""

__version__ = "1.0.0"


__all__ = ["__version__"]
