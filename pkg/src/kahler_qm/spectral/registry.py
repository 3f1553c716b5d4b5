"""
Solver plugin registry.

This module provides a centralized registry for eigensolvers using
decorator-based registration.
"""

from typing import Any, Dict, List, Type

from ..core.config import DEFAULT_TOLERANCES, Tolerances
from .base import BaseSolver


class SolverRegistry:
    """
    Central registry for spectral solvers.

    Example:
        # Register a solver
        @SolverRegistry.register
        class DenseSolver(BaseSolver):
            solver_type = "dense"
            ...

        # Create an instance
        solver = SolverRegistry.create("dense")
    """

    _solvers: Dict[str, Type[BaseSolver]] = {}

    @classmethod
    def register(cls, solver_class: Type[BaseSolver]) -> Type[BaseSolver]:
        """
        Register a solver class with the registry.

        Args:
            solver_class: The solver class to register

        Returns:
            The same solver class (for use as decorator)

        Raises:
            ValueError: If solver_type is not defined or already registered
        """
        if not solver_class.solver_type:
            raise ValueError(f"{solver_class.__name__} must define 'solver_type' class variable")

        stype = solver_class.solver_type
        if stype in cls._solvers:
            existing = cls._solvers[stype]
            raise ValueError(f"Solver type '{stype}' is already registered by {existing.__name__}")

        cls._solvers[stype] = solver_class
        return solver_class

    @classmethod
    def get(cls, solver_type: str) -> Type[BaseSolver]:
        """
        Get a solver class by its type name.

        Raises:
            ValueError: If the solver type is not registered
        """
        if solver_type not in cls._solvers:
            available = ", ".join(cls.list_types())
            raise ValueError(f"Unknown solver: '{solver_type}'. Available solvers: {available}")
        return cls._solvers[solver_type]

    @classmethod
    def create(cls, solver_type: str, tolerances: Tolerances = DEFAULT_TOLERANCES) -> BaseSolver:
        """
        Factory method to create a solver instance.

        Args:
            solver_type: "structured", "dense" or "closed-form"
            tolerances: Tolerances passed to the solver

        Returns:
            An instance of the requested solver
        """
        return cls.get(solver_type)(tolerances)

    @classmethod
    def list_types(cls) -> List[str]:
        """Sorted list of registered solver names."""
        return sorted(cls._solvers.keys())

    @classmethod
    def get_info(cls) -> Dict[str, Dict[str, Any]]:
        """
        Get metadata about all registered solvers.

        Returns:
            Dictionary mapping solver names to {"class", "doc"}
        """
        return {
            stype: {"class": sclass.__name__, "doc": (sclass.__doc__ or "").strip()}
            for stype, sclass in cls._solvers.items()
        }

    @classmethod
    def clear(cls) -> None:
        """
        Clear all registered solvers.

        This is primarily useful for testing.
        """
        cls._solvers.clear()
