"""Exception types shared across the package."""


class ConfounderLabError(Exception):
    """Base class for every error this package raises on bad input."""


class OutOfRange(ConfounderLabError):
    """A probability lies outside the open interval (0, 1), or a value is not finite."""


class DegenerateProxy(ConfounderLabError):
    """The proxy (or driver) is independent of the confounder and carries no signal."""


class EmptyStratum(ConfounderLabError):
    """Estimation was requested but at least one (a, d) stratum has no rows."""

    def __init__(self, strata):
        self.strata = tuple(strata)
        cells = ", ".join(f"(a={a}, d={d})" for a, d in self.strata)
        super().__init__(f"empty strata: {cells}")


class MuOutOfRange(ConfounderLabError):
    """Outcome means must lie in [0, 1] to serve as Bernoulli parameters."""


class EmptyInput(ConfounderLabError):
    """An operation that needs at least one record received none."""


class InvalidDocument(ConfounderLabError):
    """A parameter or data file does not follow the documented schema."""
