"""Initialization."""

__all__ = ["load_json_file", "save_to_json"]

from .utils import load_json_file, save_to_json
