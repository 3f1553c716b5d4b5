"""
Built-in verification profiles.

`standard` leaves every suite at its class defaults. `acceptance` carries the
full trial counts of the acceptance battery and is slow. `quick` is a smoke
run for development.
"""

from typing import Any, Dict, List
import copy


BUILTIN_PROFILES: Dict[str, Dict[str, Any]] = {
    "quick": {
        "seed": 1,
        "workers": 1,
        "suites": {
            "axioms": {"dims": [1, 2, 8], "trials": 20},
            "correspondence": {"dims": [1, 2, 8], "trials": 20},
            "spectral": {"dims": [1, 2, 4], "trials": 5},
            "tensor": {"dims": [1, 2, 3], "trials": 20},
            "born": {"dims": [1, 2, 4], "trials": 5},
            "groups": {"dims": [1, 2, 4], "trials": 5},
            "reconstruction": {"dims": [1, 2, 4], "trials": 10},
        },
    },
    "standard": {
        "seed": 1,
        "workers": 1,
        "suites": {},
    },
    "acceptance": {
        "seed": 1,
        "workers": 4,
        "suites": {
            "axioms": {"dims": [1, 2, 4, 8, 16, 32, 64], "trials": 1500},
            "correspondence": {"dims": [1, 2, 4, 8, 16, 32, 64], "trials": 10000},
            "spectral": {"dims": [1, 2, 4, 8, 16, 32], "trials": 1000},
            "tensor": {"dims": [1, 2, 3, 4, 5, 6, 7, 8], "trials": 1250},
            "born": {"dims": [1, 2, 4, 8, 16], "trials": 200},
            "groups": {"dims": [1, 2, 4, 8, 16], "trials": 500},
            "reconstruction": {"dims": [1, 2, 4, 8, 16], "trials": 200},
        },
    },
}


def get_builtin_profile(name: str) -> Dict[str, Any]:
    """
    Get a built-in profile by name.

    Args:
        name: Profile name (e.g., "quick", "standard")

    Returns:
        Deep copy of the profile dictionary

    Raises:
        KeyError: If profile name is not found
    """
    if name not in BUILTIN_PROFILES:
        available = ", ".join(sorted(BUILTIN_PROFILES.keys()))
        raise KeyError(f"Unknown built-in profile: '{name}'. Available: {available}")

    return copy.deepcopy(BUILTIN_PROFILES[name])


def list_builtin_profiles() -> List[str]:
    """
    List all built-in profile names.

    Returns:
        Sorted list of profile names
    """
    return sorted(BUILTIN_PROFILES.keys())
