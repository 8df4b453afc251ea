"""Exception hierarchy shared by all modules."""


class GUEError(Exception):
    """Base class for every error raised by this package."""


class RingMismatchError(GUEError, TypeError):
    """Arithmetic between elements of incompatible coefficient rings."""


class TruncationError(GUEError):
    """A coefficient beyond the tracked truncation depth was requested."""


class NotDivisibleError(GUEError):
    """A bi-series failed the (l1 - l2)^2 divisibility check."""


class WindowError(GUEError):
    """Lattice data does not cover a site required by the recursion."""

    def __init__(self, site, message=None):
        self.site = site
        super().__init__(message or f"lattice data window is missing site {site}")


class BudgetExceededError(GUEError):
    """Brute-force enumeration would exceed the configured budget."""

    def __init__(self, required, budget, message=None):
        self.required = required
        self.budget = budget
        super().__init__(
            message or f"enumeration needs {required} matchings, budget allows {budget}"
        )


class ConsistencyError(GUEError):
    """An internal identity that must hold exactly was violated."""
