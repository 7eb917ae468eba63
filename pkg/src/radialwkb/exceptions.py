"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class UsageError(ValueError):
    """A request that is structurally invalid (unknown family, wrong kind)."""


class ConvergenceError(RuntimeError):
    """A numerical procedure failed to reach its accuracy target.

    ``diagnostics`` carries whatever the failing routine could report
    (iteration trace, both spectra of a refinement pair, ...).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else {}


class FitError(ConvergenceError):
    """A least-squares fit was rank deficient or did not converge."""
