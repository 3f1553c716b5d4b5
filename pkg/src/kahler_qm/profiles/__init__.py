"""
Verification profiles: built-ins plus JSON/YAML files.

Example:
    from kahler_qm.profiles import ProfileLoader

    profile = ProfileLoader().load("quick")
"""

from .defaults import BUILTIN_PROFILES, get_builtin_profile, list_builtin_profiles
from .loader import ProfileLoader

__all__ = ["BUILTIN_PROFILES", "get_builtin_profile", "list_builtin_profiles", "ProfileLoader"]
