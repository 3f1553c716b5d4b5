"""
Verification suite registry.

Suites register themselves with a decorator, the same way solvers do.
"""

from typing import Any, Dict, List, Optional, Type

from ..core.config import DEFAULT_TOLERANCES, SuiteConfig, Tolerances
from .base import BaseSuite


class SuiteRegistry:
    """
    Central registry for verification suites.

    Example:
        @SuiteRegistry.register
        class AxiomSuite(BaseSuite):
            suite_name = "axioms"
            ...

        suite = SuiteRegistry.create("axioms", SuiteConfig(trials=10))
    """

    _suites: Dict[str, Type[BaseSuite]] = {}

    @classmethod
    def register(cls, suite_class: Type[BaseSuite]) -> Type[BaseSuite]:
        """
        Register a suite class with the registry.

        Raises:
            ValueError: If suite_name is not defined or already registered
        """
        if not suite_class.suite_name:
            raise ValueError(f"{suite_class.__name__} must define 'suite_name' class variable")

        name = suite_class.suite_name
        if name in cls._suites:
            existing = cls._suites[name]
            raise ValueError(f"Suite '{name}' is already registered by {existing.__name__}")

        cls._suites[name] = suite_class
        return suite_class

    @classmethod
    def get(cls, name: str) -> Type[BaseSuite]:
        """
        Raises:
            ValueError: If the suite is not registered
        """
        if name not in cls._suites:
            available = ", ".join(cls.list_names())
            raise ValueError(f"Unknown suite: '{name}'. Available suites: {available}, all")
        return cls._suites[name]

    @classmethod
    def create(
        cls,
        name: str,
        config: Optional[SuiteConfig] = None,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        born_rank_divisor: bool = False,
    ) -> BaseSuite:
        """Factory method to create a configured suite."""
        return cls.get(name)(config, tolerances, born_rank_divisor)

    @classmethod
    def list_names(cls) -> List[str]:
        """Suite names in registration order (the order `all` runs them)."""
        return list(cls._suites.keys())

    @classmethod
    def get_info(cls) -> Dict[str, Dict[str, Any]]:
        """
        Metadata about all registered suites.

        Returns:
            {"axioms": {"class", "dims", "trials", "tol", "doc"}, ...}
        """
        return {
            name: {
                "class": sclass.__name__,
                "dims": list(sclass.default_dims),
                "trials": sclass.default_trials,
                "tol": sclass.default_tol,
                "doc": (sclass.__doc__ or "").strip(),
            }
            for name, sclass in cls._suites.items()
        }

    @classmethod
    def clear(cls) -> None:
        """
        Clear all registered suites.

        This is primarily useful for testing.
        """
        cls._suites.clear()
