"""Exception types raised across the package."""


class CFError(Exception):
    """Base class for continued-fraction evaluation errors."""


class IndeterminateConvergent(CFError, ZeroDivisionError):
    """A convergent whose denominator B_k is zero."""

    def __init__(self, index):
        super().__init__(f"indeterminate convergent at k={index}")
        self.index = index


class BackwardDivisionError(CFError, ZeroDivisionError):
    """An intermediate denominator vanished during backward evaluation.

    Usually the truncation depth landed on a pole; retrying at depth +/- 1
    generally works.
    """

    def __init__(self, level):
        super().__init__(f"division by zero in backward pass at level {level}")
        self.level = level


class ConvergenceError(CFError):
    """Adaptive evaluation did not reach the tolerance within max_depth.

    The best available estimate is carried on ``report``.
    """

    def __init__(self, report):
        super().__init__(
            f"not converged within max_depth={report.depth_used} "
            f"(value={report.value!r}, est_error={report.est_error!r})"
        )
        self.report = report


class PoleError(CFError):
    def __init__(self, index, value):
        super().__init__(f"pole detected: |f_{index}| = {abs(value):.3e} and growing")
        self.index = index
        self.value = value


class DomainError(CFError, ValueError):
    """Parameters outside the accepted domain of a family or oracle."""


class PoleProximityError(DomainError):
    pass


class NoTerminationError(CFError):
    pass


class OracleDisagreement(CFError, RuntimeError):
    """Two independent routes of one oracle disagree (an implementation bug)."""
