"""Exception types raised across the package."""


class DomainError(ValueError):
    """A physical parameter lies outside its allowed domain."""


class RangeError(ValueError):
    """An input is too large for a numerically safe evaluation."""


class WronskianViolation(ValueError):
    """A mode pair does not satisfy f g* - f* g = i within tolerance."""


class StepTooLarge(ValueError):
    """The integrator step does not resolve the local frequency."""
