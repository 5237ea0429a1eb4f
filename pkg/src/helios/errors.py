"""Exception types shared across the library.

Domain errors signal arguments outside the supported envelope; capacity
errors signal that an intermediate quantity would leave the representable
floating range (they are raised, never silently saturated).
"""


class DomainError(ValueError):
    """Argument outside the mathematically supported domain."""


class CapacityError(ArithmeticError):
    """Intermediate value would exceed the representable floating range."""


class ResolutionError(ValueError):
    """Quadrature grid too coarse for the requested band limit."""
