"""Main entry point for the congest-apsp CLI."""

from .cli import app

if __name__ == "__main__":
    app()
