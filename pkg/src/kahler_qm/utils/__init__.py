"""Utility functions and helpers."""

from .files import ensure_parent_dir, read_json, write_output
from .progress import ProgressTracker

__all__ = ["ensure_parent_dir", "read_json", "write_output", "ProgressTracker"]
