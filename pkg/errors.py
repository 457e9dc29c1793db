"""
Domain errors shared by every package.

All errors derive from ``LabError`` (a ``ValueError``), carry a stable
``code`` and a JSON-friendly ``details`` dict. The CLI prints
``to_dict()`` on stderr and the HTTP service returns it in 400 bodies.
"""

from typing import Any, Dict, List, Optional


class LabError(ValueError):
    """Base class for domain errors."""

    code = "lab_error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": str(self), **self.details}


# ---------------------------------------------------------------- metafib

class InvalidRSpec(LabError):
    code = "invalid_rspec"


class NotMetaFib(LabError):
    """Partial sums of the history skip over n_k."""

    code = "not_metafib"

    def __init__(self, k: int, undershoot: int, overshoot: int):
        super().__init__(
            f"n_{k} is not a sum of consecutive predecessors "
            f"(partial sums reach {undershoot} then {overshoot})",
            k=k, undershoot=undershoot, overshoot=overshoot,
        )
        self.k = k
        self.undershoot = undershoot
        self.overshoot = overshoot


class PreconditionFailed(LabError):
    code = "precondition_failed"


# ---------------------------------------------------------------- twd

class AddressOutOfRange(LabError):
    code = "address_out_of_range"


class NonPositiveShift(LabError):
    code = "non_positive_shift"


class NoReturnWithin(LabError):
    code = "no_return_within"

    def __init__(self, level: int, n_max: int):
        super().__init__(f"vertex at level {level} does not return within {n_max} iterates",
                         level=level, n_max=n_max)
        self.level = level
        self.n_max = n_max


class BudgetExhausted(LabError):
    """Chain construction ran out of budget; ``partial`` holds what was built."""

    code = "budget_exhausted"

    def __init__(self, message: str, partial: Optional[Any] = None, **details: Any):
        if partial is not None:
            details["partial"] = partial.model_dump()
        super().__init__(message, **details)
        self.partial = partial


class Inconclusive(LabError):
    code = "inconclusive"


class ModelFormatError(LabError):
    code = "model_format_error"


# ---------------------------------------------------------------- tree-models

class NoSuchLevel(LabError):
    code = "no_such_level"

    def __init__(self, message: str, levels: List[int]):
        super().__init__(message, levels=list(levels))
        self.levels = list(levels)


# ---------------------------------------------------------------- puzzle

class UnresolvableExceptional(LabError):
    code = "unresolvable_exceptional"


class NonUniformShift(LabError):
    code = "non_uniform_shift"


# ---------------------------------------------------------------- yoccoz

class AmbiguousPullback(LabError):
    code = "ambiguous_pullback"


class NoValidGrouping(LabError):
    code = "no_valid_grouping"


class InconsistentImage(LabError):
    code = "inconsistent_image"


class NonUniqueCritical(LabError):
    code = "non_unique_critical"


class CrossingClasses(LabError):
    """The classes of one depth do not cut the disk into the expected faces."""

    code = "crossing_classes"
