"""
Configuration management for tolerances and verification profiles.

This module defines dataclasses for numerical tolerances and for the
verification profiles consumed by the CLI, in a type-safe manner.
"""

from dataclasses import dataclass, field, asdict, fields
from typing import Dict, Any, Optional, List
import json


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerances shared by every module.

    Attributes:
        rel: Relative comparison tolerance
        abs_floor: Absolute floor for comparisons near zero
        cluster_rel: Relative gap (times operator norm) below which eigenvalues merge
        cluster_abs: Absolute floor for the clustering gap
        membership: Group membership residual bound (scaled by matrix norm)
        singular_a: Closed-form K^4 solver falls back when |a| is below this (scaled)
        normalization: Allowed deviation of g(eta, eta) from 1
    """
    rel: float = 1e-10
    abs_floor: float = 1e-13
    cluster_rel: float = 1e-9
    cluster_abs: float = 1e-12
    membership: float = 1e-9
    singular_a: float = 1e-8
    normalization: float = 1e-10

    def bound(self, scale: float = 1.0) -> float:
        """Allowed absolute error for quantities of magnitude `scale`."""
        return max(self.rel * abs(scale), self.abs_floor)

    def close(self, a: float, b: float) -> bool:
        """Compare two scalars with relative tolerance and absolute floor."""
        return abs(a - b) <= self.bound(max(abs(a), abs(b)))

    def cluster_threshold(self, norm: float) -> float:
        """Eigenvalue gap at or below which two eigenvalues share a cluster."""
        return max(self.cluster_rel * norm, self.cluster_abs)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Tolerances":
        """
        Create Tolerances from dictionary, ignoring unknown keys.

        Args:
            data: Dictionary with any subset of the tolerance fields

        Returns:
            Tolerances instance
        """
        if not isinstance(data, dict):
            raise ValueError(f"Tolerances must be a dict, got {type(data)}")
        known = {f.name for f in fields(cls)}
        return cls(**{k: float(v) for k, v in data.items() if k in known})

    def to_dict(self) -> Dict[str, float]:
        """Convert to dictionary format."""
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()


@dataclass
class SuiteConfig:
    """
    Per-suite verification settings.

    Attributes:
        dims: Complex dimensions to test (None = suite default)
        trials: Random trials per dimension (None = suite default)
        tol: Pass/fail bound on every residual (None = suite default)
    """
    dims: Optional[List[int]] = None
    trials: Optional[int] = None
    tol: Optional[float] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteConfig":
        """
        Create SuiteConfig from dictionary.

        Args:
            data: Dictionary with optional 'dims', 'trials' and 'tol'

        Returns:
            SuiteConfig instance
        """
        if not isinstance(data, dict):
            raise ValueError(f"Suite config must be a dict, got {type(data)}")

        dims = data.get("dims")
        if dims is not None:
            dims = [int(d) for d in dims]
            if any(d < 1 for d in dims):
                raise ValueError(f"Suite dims must be positive, got {dims}")

        trials = data.get("trials")
        if trials is not None:
            trials = int(trials)
            if trials < 1:
                raise ValueError(f"Suite trials must be >= 1, got {trials}")

        tol = data.get("tol")
        return cls(dims=dims, trials=trials, tol=None if tol is None else float(tol))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary format, dropping unset fields."""
        return {k: v for k, v in asdict(self).items() if v is not None}

    def merge_with(self, other: "SuiteConfig") -> "SuiteConfig":
        """Return a copy where fields set on `other` take precedence."""
        merged = self.to_dict()
        merged.update(other.to_dict())
        return SuiteConfig.from_dict(merged)


@dataclass
class ProfileConfig:
    """
    Complete verification profile.

    A profile fixes the seed, the parallelism and the per-suite sizes used
    by `kahler-qm verify`.
    """

    seed: int = 1
    workers: int = 1
    born_rank_divisor: bool = False

    tolerances: Tolerances = field(default_factory=Tolerances)
    suites: Dict[str, SuiteConfig] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ProfileConfig":
        """
        Create ProfileConfig from dictionary.

        Args:
            data: Dictionary with profile fields

        Returns:
            ProfileConfig instance with all fields populated
        """
        if not isinstance(data, dict):
            raise ValueError(f"Profile must be a dict, got {type(data)}")

        suites = {
            name: SuiteConfig.from_dict(cfg or {})
            for name, cfg in (data.get("suites") or {}).items()
        }
        tolerances = Tolerances.from_dict(data.get("tolerances") or {})

        seed = int(data.get("seed", 1))
        if seed < 0:
            raise ValueError(f"Seed must be an unsigned integer, got {seed}")

        return cls(
            seed=seed,
            workers=max(1, int(data.get("workers", 1))),
            born_rank_divisor=bool(data.get("born_rank_divisor", False)),
            tolerances=tolerances,
            suites=suites,
        )

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary format.

        Returns:
            Dictionary representation suitable for JSON serialization
        """
        return {
            "seed": self.seed,
            "workers": self.workers,
            "born_rank_divisor": self.born_rank_divisor,
            "tolerances": self.tolerances.to_dict(),
            "suites": {name: cfg.to_dict() for name, cfg in sorted(self.suites.items())},
        }

    def suite(self, name: str) -> SuiteConfig:
        """Settings for one suite (empty config if the profile does not mention it)."""
        return self.suites.get(name, SuiteConfig())

    def merge_with(self, other: Dict[str, Any]) -> "ProfileConfig":
        """
        Merge command-line overrides into this profile.

        Args:
            other: Partial profile dictionary; None values are ignored

        Returns:
            New ProfileConfig with merged values
        """
        merged = self.to_dict()
        for key, value in other.items():
            if value is None:
                continue
            if key == "suites":
                for name, cfg in value.items():
                    base = SuiteConfig.from_dict(merged["suites"].get(name, {}))
                    merged["suites"][name] = base.merge_with(SuiteConfig.from_dict(cfg)).to_dict()
            elif key == "tolerances":
                merged["tolerances"].update(value)
            else:
                merged[key] = value
        return ProfileConfig.from_dict(merged)

    def to_json(self, indent: int = 2, sort_keys: bool = True) -> str:
        """Convert to JSON string."""
        return json.dumps(self.to_dict(), indent=indent, sort_keys=sort_keys)

    @classmethod
    def from_json(cls, json_str: str) -> "ProfileConfig":
        """Create from JSON string."""
        return cls.from_dict(json.loads(json_str))
