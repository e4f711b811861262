"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlexcircleError(Exception):
    """Base class for all errors raised by alexcircle."""


class NotAdmissible(AlexcircleError, ValueError):
    """Raised when an operation receives a tuple that fails validation.

    The failing :class:`~alexcircle.core.ValidationReport` is kept on
    ``report`` so callers can list every violated rule.
    """

    def __init__(self, report):
        self.report = report
        rules = ", ".join(v.rule for v in report.violations)
        super().__init__(f"not admissible: {rules}")


class ReductionInconsistency(AlexcircleError, RuntimeError):
    """The manifold tuple produced by a reduction failed validation."""


class InconsistentPlan(AlexcircleError, ValueError):
    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("inconsistent plan: " + "; ".join(self.problems))


class IncompatibleCollapse(AlexcircleError, ValueError):
    """A collapse decomposition contains B(pt) pieces."""


class BoundsTooLarge(AlexcircleError, ValueError):
    def __init__(self, projected: int, cap: int):
        self.projected = projected
        self.cap = cap
        super().__init__(f"bounds too large: {projected} classes projected, cap is {cap}")


class EmptyDomain(AlexcircleError, ValueError):
    """No valid tuple fits the requested bounds."""


class InvalidDecomposition(AlexcircleError, ValueError):
    """A collapse decomposition names an unknown piece or a bad parameter."""


class ParseError(AlexcircleError, ValueError):
    """A JSON document does not match its schema; ``key`` names the offending field."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
