"""Exception types shared across the package."""

from __future__ import annotations


class PellsgError(Exception):
    """Base class for all package-specific errors."""


class IndexConstraintViolation(PellsgError, ValueError):
    """Family indices (u, i, k) violate the constraints of the requested family."""


class NonCoprime(PellsgError, ValueError):
    """Generator set has gcd > 1, so no Frobenius-type invariants exist."""


class OutOfValidityRange(PellsgError, ValueError):
    """Closed-form formula evaluated at a level p outside its guaranteed range."""


class NonIntegerResult(PellsgError, ArithmeticError):
    """An exact rational intermediate failed its integrality postcondition."""


class BudgetExceeded(PellsgError, RuntimeError):
    """Enumeration engine exceeded its tuple-visit budget before converging."""

    def __init__(self, visited: int, budget: int, message: str = "") -> None:
        self.visited = visited
        self.budget = budget
        text = message or (
            f"enumeration budget exceeded: visited {visited} tail tuples "
            f"(budget {budget}); raise the budget to continue"
        )
        super().__init__(text)


class CapExceeded(PellsgError, RuntimeError):
    """Brute-force oracle asked to scan past its configured safety cap."""
