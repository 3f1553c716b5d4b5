"""
Machine-readable verification and benchmark records.

Reports serialize with sorted keys and a two-space indent and carry no
timestamps, so a (suite, seed, trials, dims, tol) tuple always produces the
same bytes.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class CheckResult:
    """Worst residual of one named check over all trials."""

    name: str
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "residual": self.residual}


@dataclass
class VerificationReport:
    """
    Result of one suite, or of `all` with the per-suite reports nested.

    Attributes:
        suite: Suite name ("all" for the aggregate)
        seed: Master seed
        trials: Trials per dimension (summed over suites for "all")
        dimensions: Complex dimensions tested
        max_residual: Largest check residual
        tolerance: Pass bound applied to every check residual
        passed: True iff every residual <= tolerance
        checks: Per-check worst residuals
        suites: Nested reports (only for "all")
        details: Extra findings that are not residuals
    """
    suite: str
    seed: int
    trials: int
    dimensions: List[int]
    max_residual: float
    tolerance: float
    passed: bool
    checks: List[CheckResult] = field(default_factory=list)
    suites: List["VerificationReport"] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_checks(
        cls,
        suite: str,
        seed: int,
        trials: int,
        dimensions: List[int],
        tolerance: float,
        checks: List[CheckResult],
        details: Dict[str, Any],
    ) -> "VerificationReport":
        max_residual = max((c.residual for c in checks), default=0.0)
        return cls(
            suite=suite,
            seed=seed,
            trials=trials,
            dimensions=dimensions,
            max_residual=max_residual,
            tolerance=tolerance,
            passed=all(c.residual <= tolerance for c in checks),
            checks=checks,
            details=details,
        )

    @classmethod
    def aggregate(cls, seed: int, reports: List["VerificationReport"]) -> "VerificationReport":
        """
        Combine per-suite reports.

        Suites use different tolerances, so each aggregate check is the
        suite's max_residual divided by its tolerance and the aggregate
        tolerance is 1.
        """
        checks = [
            CheckResult(r.suite, r.max_residual / r.tolerance if r.tolerance > 0 else float("inf"))
            for r in reports
        ]
        result = cls.from_checks(
            suite="all",
            seed=seed,
            trials=sum(r.trials for r in reports),
            dimensions=sorted({n for r in reports for n in r.dimensions}),
            tolerance=1.0,
            checks=checks,
            details={},
        )
        result.passed = result.passed and all(r.passed for r in reports)
        result.suites = list(reports)
        return result

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "dimensions": list(self.dimensions),
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.suites:
            data["suites"] = [r.to_dict() for r in self.suites]
        if self.details:
            data["details"] = self.details
        return data

    def to_json(self, indent: int = 2, sort_keys: bool = True) -> str:
        """Convert to JSON string."""
        return json.dumps(self.to_dict(), indent=indent, sort_keys=sort_keys)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        """Parse a report previously written by to_json()."""
        for key in ("suite", "seed", "trials", "dimensions", "max_residual", "tolerance", "passed"):
            if key not in data:
                raise ValueError(f"Report is missing '{key}' field")
        return cls(
            suite=data["suite"],
            seed=int(data["seed"]),
            trials=int(data["trials"]),
            dimensions=[int(n) for n in data["dimensions"]],
            max_residual=float(data["max_residual"]),
            tolerance=float(data["tolerance"]),
            passed=bool(data["passed"]),
            checks=[CheckResult(c["name"], float(c["residual"])) for c in data.get("checks", [])],
            suites=[cls.from_dict(r) for r in data.get("suites", [])],
            details=dict(data.get("details", {})),
        )


@dataclass(frozen=True)
class BenchRecord:
    """
    Timing of one solver at one dimension.

    Attributes:
        n: Complex dimension
        method: "structured" or "dense"
        wall_time: Mean seconds per solve
        residual: Worst relative reconstruction residual against the operator
    """
    n: int
    method: str
    wall_time: float
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "method": self.method, "wall_time": self.wall_time, "residual": self.residual}
