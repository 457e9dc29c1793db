"""
Data models for trees with dynamics: vertices, reports and return chains.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


@dataclass(frozen=True)
class VertexRef:
    """A vertex: its level and an id unique within that level."""
    level: int
    id: str

    def __str__(self) -> str:
        return f"{self.id or 'v'}@{self.level}"


class ViolationKind(str, Enum):
    """What a validation report can complain about."""
    PARENT_LEVEL = "parent_level"
    PARENT_CHILD = "parent_child_mismatch"
    NON_UNIFORM_SHIFT = "non_uniform_shift"
    CHILD_NOT_PRESERVED = "child_not_preserved"
    MISSING_IMAGE = "missing_image"
    NO_COMMON_ANCESTOR = "no_common_ancestor"
    LEAF = "leaf"
    NOT_ROOTED = "not_rooted"
    SHIFT_NOT_POSITIVE = "shift_not_positive"


class Violation(BaseModel):
    kind: ViolationKind
    witness: str = Field(..., description="Vertex (id@level) exhibiting the problem")
    detail: str = ""


class ValidationReport(BaseModel):
    """Result of checking a model on a finite truncation."""
    depth: int
    H: Optional[int] = Field(None, description="Detected uniform level shift, if any")
    vertices_checked: int = 0
    violations: List[Violation] = Field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


class FirstReturn(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int = Field(..., description="Level l of the returning vertex")
    n: int = Field(..., ge=1, description="First return time")
    target_level: int = Field(..., description="Landing level l - nH")


class ReturnChain(BaseModel):
    """
    Levels l(k) and first return times n_k for k in [k_lo, K].

    x_(l(k)) first-returns onto x_(l(k-1)) after n_k iterates. When
    ``nonrecurrent_at`` is set, n_k is infinite for every k beyond it.
    """
    model_config = ConfigDict(frozen=True)

    k_lo: int = Field(..., le=0)
    levels: List[int]
    times: List[int]
    nonrecurrent_at: Optional[int] = None

    @model_validator(mode="after")
    def check_lengths(self):
        if len(self.levels) != len(self.times):
            raise ValueError("levels and times must have equal length")
        return self

    @property
    def K(self) -> int:
        return self.k_lo + len(self.levels) - 1

    def indices(self) -> range:
        return range(self.k_lo, self.K + 1)

    def level(self, k: int) -> int:
        return self.levels[k - self.k_lo]

    def time(self, k: int) -> int:
        return self.times[k - self.k_lo]

    def times_by_index(self) -> Dict[int, int]:
        return dict(zip(self.indices(), self.times))


class PeriodReport(BaseModel):
    """detect_period outcome; period is None when aperiodic within budget."""
    period: Optional[int] = None
    probe_level: int
    times: List[int] = Field(default_factory=list, description="First return times from the probe level on")

    @property
    def periodic(self) -> bool:
        return self.period is not None


class GromovDistance(BaseModel):
    distance: float
    agreement_level: int
    at_cap: bool = False
