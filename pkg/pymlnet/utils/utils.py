import json
import logging
import os
from typing import Any

logger = logging.getLogger(__name__)


def load_json_file(file_path: str) -> dict[str, Any]:
    """Read a JSON object from ``file_path``.

    Returns an empty dict for an empty path. A missing file, unreadable JSON or a
    non-object document is logged and re-raised as ``ValueError``.
    """
    if not file_path.strip():
        return {}

    file_path = os.path.expandvars(os.path.expanduser(file_path))
    if not os.path.isfile(file_path):
        logger.error("File not found: %s", file_path)
        raise ValueError(f"file not found: {file_path}")

    try:
        with open(file_path, encoding="utf-8", newline="\n") as file:
            data = json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        logger.error("Error reading file %s: %s", file_path, e)
        raise ValueError(f"cannot read {file_path}: {e}") from e

    if not isinstance(data, dict):
        raise ValueError(f"{file_path} must hold a JSON object, got {type(data).__name__}")
    return data


def save_to_json(data: dict, full_json: str) -> None:
    if not data:
        return None

    full_json = os.path.expandvars(os.path.expanduser(full_json))
    if folder := os.path.dirname(full_json):
        os.makedirs(folder, exist_ok=True)
    with open(full_json, "w", encoding="utf-8", newline="\n") as f:
        json.dump(data, f, indent=4, sort_keys=True, ensure_ascii=True)
    return None
