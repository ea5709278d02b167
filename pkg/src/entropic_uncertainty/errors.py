"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class NearSingular(ArithmeticError):
    """A closed-form derivative was requested too close to an eigenstate point."""


class ConvergenceFailure(RuntimeError):
    """A root finder could not bracket or resolve its root."""


class BoundOrderingError(AssertionError):
    """Deutsch <= Maassen-Uffink <= optimal was violated beyond tolerance."""
