"""Command-line interface and JSON document formats."""

from .main import run

__all__ = ["run"]
