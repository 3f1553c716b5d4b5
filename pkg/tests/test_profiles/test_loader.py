"""
Tests for built-in profiles and the profile loader.
"""

import json

import pytest
import yaml

from kahler_qm.profiles import BUILTIN_PROFILES, ProfileLoader, get_builtin_profile, list_builtin_profiles


class TestBuiltinProfiles:
    """Test suite for the built-in profiles."""

    def test_names(self):
        """Test the built-in profile list."""
        assert list_builtin_profiles() == ["acceptance", "quick", "standard"]

    def test_get_returns_copy(self):
        """Test that callers cannot mutate the built-ins."""
        profile = get_builtin_profile("quick")
        profile["suites"]["axioms"]["trials"] = 1
        assert BUILTIN_PROFILES["quick"]["suites"]["axioms"]["trials"] == 20

    def test_unknown(self):
        """Test the KeyError for unknown names."""
        with pytest.raises(KeyError, match="Unknown built-in profile"):
            get_builtin_profile("nightly")

    def test_acceptance_sizes(self):
        """Test the acceptance battery trial counts."""
        profile = ProfileLoader().load("acceptance")
        assert profile.suite("correspondence").trials == 10000
        assert profile.suite("spectral").trials == 1000
        assert profile.suite("reconstruction").trials == 200
        assert profile.workers == 4

    def test_standard_uses_suite_defaults(self):
        """Test that standard sets no per-suite overrides."""
        assert ProfileLoader().load("standard").suites == {}


class TestProfileLoader:
    """Test suite for ProfileLoader resolution."""

    def test_json_file(self, tmp_path):
        """Test loading a single-profile JSON file by path."""
        path = tmp_path / "tight.json"
        path.write_text(json.dumps({"seed": 7, "suites": {"axioms": {"trials": 3}}}))
        profile = ProfileLoader().load(str(path))
        assert profile.seed == 7
        assert profile.suite("axioms").trials == 3

    def test_named_profile_in_yaml(self, tmp_path):
        """Test file.yaml:name addressing."""
        path = tmp_path / "profiles.yaml"
        path.write_text(yaml.safe_dump({"ci": {"seed": 2}, "nightly": {"seed": 3, "workers": 8}}))
        profile = ProfileLoader().load(f"{path}:nightly")
        assert (profile.seed, profile.workers) == (3, 8)

    def test_named_profile_missing(self, tmp_path):
        """Test the error lists the profiles in the file."""
        path = tmp_path / "profiles.yaml"
        path.write_text(yaml.safe_dump({"ci": {"seed": 2}}))
        with pytest.raises(ValueError, match="Available: ci"):
            ProfileLoader().load(f"{path}:nightly")

    def test_multi_profile_file_needs_name(self, tmp_path):
        """Test that a multi-profile file cannot be loaded whole."""
        path = tmp_path / "profiles.yaml"
        path.write_text(yaml.safe_dump({"ci": {"seed": 2}, "nightly": {"seed": 3}}))
        with pytest.raises(ValueError, match="multiple profiles"):
            ProfileLoader().load(str(path))

    def test_empty_file_is_default_profile(self, tmp_path):
        """Test that {} loads as the default profile."""
        path = tmp_path / "empty.json"
        path.write_text("{}")
        assert ProfileLoader().load(str(path)).seed == 1

    def test_directory_search(self, tmp_path):
        """Test lookup by bare name in a profile directory."""
        (tmp_path / "mine.yml").write_text("seed: 11\n")
        profile = ProfileLoader(profile_dirs=[tmp_path]).load("mine")
        assert profile.seed == 11

    def test_unsupported_extension(self, tmp_path):
        """Test that only JSON and YAML are accepted."""
        path = tmp_path / "profile.toml"
        path.write_text("seed = 1\n")
        with pytest.raises(ValueError, match="Unsupported profile file extension"):
            ProfileLoader().load(str(path))

    def test_not_found(self, tmp_path):
        """Test the error for an unknown reference."""
        with pytest.raises(ValueError, match="not found"):
            ProfileLoader(profile_dirs=[tmp_path]).load("nowhere")

    def test_invalid_values(self, tmp_path):
        """Test that bad suite settings surface as ValueError."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"suites": {"axioms": {"trials": 0}}}))
        with pytest.raises(ValueError, match="trials must be >= 1"):
            ProfileLoader().load(str(path))

    def test_list_available(self, tmp_path):
        """Test built-ins and files are both listed."""
        (tmp_path / "extra.json").write_text("{}")
        (tmp_path / "notes.txt").write_text("ignored")
        available = ProfileLoader(profile_dirs=[tmp_path]).list_available()
        assert available["quick"] == "built-in"
        assert available["extra.json"] == str(tmp_path / "extra.json")
        assert "notes.txt" not in available
