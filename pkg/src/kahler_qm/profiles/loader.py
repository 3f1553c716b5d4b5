"""
Profile loading and resolution.

Profiles come from the built-ins, single-profile JSON/YAML files,
multi-profile files addressed as `file.yaml:name`, or a search directory.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..core.config import ProfileConfig
from .defaults import BUILTIN_PROFILES, get_builtin_profile

try:
    import yaml
except ImportError:
    yaml = None  # type: ignore

PROFILE_KEYS = {"seed", "workers", "born_rank_divisor", "tolerances", "suites"}


class ProfileLoader:
    """
    Loads and resolves verification profiles.

    Example:
        loader = ProfileLoader()
        profile = loader.load("standard")
        profile = loader.load("profiles.yaml:nightly")
    """

    def __init__(self, profile_dirs: Optional[List[Path]] = None):
        """
        Initialize profile loader.

        Args:
            profile_dirs: Directories to search for profile files (default: ["profiles"])
        """
        self.profile_dirs = profile_dirs or [Path("profiles")]

    def load(self, profile_ref: str) -> ProfileConfig:
        """
        Load a profile.

        Resolution order:
        1. Built-in profiles (if name matches)
        2. Multi-profile file with name (if contains ':')
        3. Direct file path (if exists)
        4. Search in profile directories

        Raises:
            ValueError: If the profile cannot be found or loaded
        """
        if profile_ref in BUILTIN_PROFILES:
            return ProfileConfig.from_dict(get_builtin_profile(profile_ref))

        if ":" in profile_ref:
            file_part, name_part = profile_ref.split(":", 1)
            file_path = Path(file_part)
            if file_path.exists():
                return self._load_named_profile(file_path, name_part)

        file_path = Path(profile_ref)
        if file_path.exists():
            return self._load_single_profile(file_path)

        resolved = self._resolve_in_directories(profile_ref)
        if resolved:
            return self._load_single_profile(resolved)

        raise ValueError(
            f"Profile '{profile_ref}' not found. "
            f"Tried: built-in profiles, direct path, profile directories. "
            f"Available built-ins: {', '.join(sorted(BUILTIN_PROFILES.keys()))}"
        )

    def _load_single_profile(self, path: Path) -> ProfileConfig:
        data = self._load_file(path)
        if not isinstance(data, dict):
            raise ValueError(f"Profile file '{path}' must contain a dictionary")
        if not self._is_single_profile(data):
            raise ValueError(
                f"File '{path}' appears to contain multiple profiles. "
                f"Use '{path}:profile_name' to specify which one."
            )
        return ProfileConfig.from_dict(data)

    def _load_named_profile(self, path: Path, name: str) -> ProfileConfig:
        data = self._load_file(path)
        if not isinstance(data, dict):
            raise ValueError(f"Profile file '{path}' must contain a dictionary")
        if name not in data:
            available = ", ".join(sorted(data.keys()))
            raise ValueError(f"Profile '{name}' not found in '{path}'. Available: {available}")
        if not isinstance(data[name], dict):
            raise ValueError(f"Profile '{name}' in '{path}' must be a dictionary")
        return ProfileConfig.from_dict(data[name])

    def _load_file(self, path: Path) -> Any:
        """Load a JSON or YAML file."""
        ext = path.suffix.lower()
        text = path.read_text(encoding="utf-8")

        if ext in (".yaml", ".yml"):
            if yaml is None:
                raise RuntimeError("PyYAML is not installed. Install with: pip install pyyaml")
            return yaml.safe_load(text)

        if ext == ".json":
            return json.loads(text)

        raise ValueError(f"Unsupported profile file extension '{ext}'. Use .json, .yaml, or .yml")

    def _is_single_profile(self, data: dict) -> bool:
        # An empty file is an empty profile
        return not data or any(key in data for key in PROFILE_KEYS)

    def _resolve_in_directories(self, name: str) -> Optional[Path]:
        for directory in self.profile_dirs:
            if not directory.exists() or not directory.is_dir():
                continue

            candidate = directory / name
            if candidate.exists() and candidate.is_file():
                return candidate

            for ext in [".json", ".yaml", ".yml"]:
                candidate = directory / (name + ext)
                if candidate.exists() and candidate.is_file():
                    return candidate

        return None

    def list_available(self) -> Dict[str, str]:
        """
        List all available profiles with their sources.

        Returns:
            Dictionary mapping profile names to "built-in" or a file path
        """
        profiles: Dict[str, str] = {name: "built-in" for name in BUILTIN_PROFILES}

        for directory in self.profile_dirs:
            if not directory.exists() or not directory.is_dir():
                continue
            for path in sorted(directory.iterdir()):
                if path.is_file() and path.suffix.lower() in (".json", ".yaml", ".yml"):
                    profiles[path.name] = str(path)

        return profiles
