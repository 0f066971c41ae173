"""Exception hierarchy shared by all modules.

Domain errors (bad parameters, undefined regimes, out-of-range queries)
map to CLI exit code 2; convergence and construction failures map to 3.
"""


class DomainError(ValueError):
    """Parameters outside the mathematical domain of an operation."""


class RegimeNonexistentError(DomainError):
    """A boundary regime that does not exist for the given coupling.

    Raised when the nonlinear or linear-regular boundary behavior is
    requested for mu <= -mu_star, where no such solution exists.
    """


class DataError(ValueError):
    """Input data unusable for the requested computation (e.g. a fit
    window containing nonpositive samples)."""


class ConvergenceError(RuntimeError):
    """An iterative procedure failed to converge within its budget."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class ConstructionError(RuntimeError):
    """An automatic parameter search exhausted its budget without
    producing a valid object (barrier, splice, sandwich)."""
