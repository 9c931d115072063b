"""Exception types raised by dpcomb."""


class DomainError(ValueError):
    """Argument outside the domain where a formula or construction is defined."""


class ConstructionError(ValueError):
    """A resonant potential could not be built from the supplied data."""


class NumericalCorruptionError(ArithmeticError):
    """A matrix that must lie in SU(1,1) does not, or a product overflowed."""


class IntegrationError(RuntimeError):
    """The ODE integrator failed to reach its tolerance."""
