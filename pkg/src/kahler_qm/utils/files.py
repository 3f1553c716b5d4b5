"""
File utility functions.
"""

import json
from pathlib import Path
from typing import Any, Optional


def ensure_parent_dir(path: Path) -> None:
    """
    Ensure parent directory exists for a file path.

    Args:
        path: File path whose parent directory should exist
    """
    path.parent.mkdir(parents=True, exist_ok=True)


def read_json(path: Path) -> Any:
    """
    Load a UTF-8 JSON document.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not valid JSON
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {path}: {e}") from e


def write_output(text: str, path: Optional[Path] = None) -> None:
    """
    Write a document to `path`, or to stdout when no path is given.

    A trailing newline is always added.
    """
    if path is None:
        print(text)
        return
    path = Path(path)
    ensure_parent_dir(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text + "\n")
