"""Initialization."""

__all__ = ["build_parser", "main", "run"]

from .run_cli import build_parser, main, run
