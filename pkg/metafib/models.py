"""
Pydantic models for variable-r meta-Fibonacci sequences.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from errors import InvalidRSpec


class RKind(str, Enum):
    """Closed forms an r-rule can take."""
    CONSTANT = "constant"
    IDENTITY = "identity"
    POWER_OF_TWO = "pow2"
    INDICATOR = "indicator"
    TABLE = "table"


class IndicatorRule(str, Enum):
    """Index sets for indicator rules (k >= 1 only)."""
    POWER_OF_TWO = "power_of_two"   # k = 2^m with m >= 1
    RESIDUE = "residue"             # k = residue (mod modulus)


class RSpec(BaseModel):
    """
    Rule for r(k), the number of summands at index k.
    r(k) = 1 for every k <= 0 regardless of kind.
    """
    model_config = ConfigDict(frozen=True)

    kind: RKind = Field(..., description="Closed form of the rule")
    value: Optional[int] = Field(None, description="Constant r for kind=constant")
    rule: Optional[IndicatorRule] = Field(None, description="Index set for kind=indicator")
    modulus: Optional[int] = Field(None, ge=1, description="Modulus for residue indicators")
    residue: Optional[int] = Field(None, description="Residue for residue indicators")
    a: Optional[int] = Field(None, description="r(k) on the indicator set")
    b: Optional[int] = Field(None, description="r(k) off the indicator set")
    entries: Dict[int, int] = Field(default_factory=dict, description="Explicit r(k) values for kind=table")
    tail: Optional["RSpec"] = Field(None, description="Rule used for k outside the table")

    @model_validator(mode="after")
    def check_kind_fields(self):
        required = {
            RKind.CONSTANT: ("value",),
            RKind.INDICATOR: ("rule", "a", "b"),
            RKind.TABLE: ("tail",),
        }.get(self.kind, ())
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind.value} rule needs {', '.join(missing)}")
        if self.rule == IndicatorRule.RESIDUE and (self.modulus is None or self.residue is None):
            raise ValueError("residue indicator needs modulus and residue")
        return self

    def __call__(self, k: int) -> int:
        if k <= 0:
            return 1
        if self.kind == RKind.CONSTANT:
            r = self.value
        elif self.kind == RKind.IDENTITY:
            r = k
        elif self.kind == RKind.POWER_OF_TWO:
            r = 1 << (k - 1)
        elif self.kind == RKind.INDICATOR:
            r = self.a if self._in_set(k) else self.b
        else:
            r = self.entries[k] if k in self.entries else self.tail(k)
        if r < 1:
            raise InvalidRSpec(f"r({k}) = {r} is not positive", k=k, r=r)
        return r

    def _in_set(self, k: int) -> bool:
        if self.rule == IndicatorRule.POWER_OF_TWO:
            return k >= 2 and k & (k - 1) == 0
        return k % self.modulus == self.residue % self.modulus

    def values(self, K: int) -> List[int]:
        """[r(1), ..., r(K)]."""
        return [self(k) for k in range(1, K + 1)]

    # ---- named constructors

    @classmethod
    def constant(cls, r: int) -> "RSpec":
        return cls(kind=RKind.CONSTANT, value=r)

    @classmethod
    def identity(cls) -> "RSpec":
        return cls(kind=RKind.IDENTITY)

    @classmethod
    def power_of_two(cls) -> "RSpec":
        return cls(kind=RKind.POWER_OF_TWO)

    @classmethod
    def indicator_power_of_two(cls, a: int = 2, b: int = 1) -> "RSpec":
        """r(k) = a if k = 2^m (m >= 1) else b; a=2, b=1 gives linear growth."""
        return cls(kind=RKind.INDICATOR, rule=IndicatorRule.POWER_OF_TWO, a=a, b=b)

    @classmethod
    def indicator_residue(cls, modulus: int, residue: int, a: int, b: int) -> "RSpec":
        return cls(kind=RKind.INDICATOR, rule=IndicatorRule.RESIDUE,
                   modulus=modulus, residue=residue, a=a, b=b)

    @classmethod
    def sharpness(cls, J: int) -> "RSpec":
        """r(k) = 2 iff k = 0 (mod J+2); n_k = 2^(k // (J+2)) exactly."""
        return cls.indicator_residue(J + 2, 0, 2, 1)

    @classmethod
    def fibonacci(cls) -> "RSpec":
        """r(1) = 1 and r(k) = 2 afterwards, so n_k = u_(k+1)."""
        return cls.table({1: 1}, tail=cls.constant(2))

    @classmethod
    def table(cls, entries: Dict[int, int], tail: Optional["RSpec"] = None) -> "RSpec":
        return cls(kind=RKind.TABLE, entries=dict(entries), tail=tail or cls.constant(1))


class MetaFibSeq(BaseModel):
    """
    A sequence in normal form: n_k = 1 for all k <= 0.

    Only n_1..n_K are stored; ``k_lo`` records the lowest index the
    recurrence reached back to (1 - max r(k)).
    """
    model_config = ConfigDict(frozen=True)

    values: List[int] = Field(..., description="n_1 .. n_K")
    k_lo: int = Field(0, le=0, description="Lowest index used by the recurrence")
    spec: Optional[RSpec] = Field(None, description="Rule that generated the sequence, if known")

    @field_validator("values")
    @classmethod
    def check_values(cls, values: List[int]) -> List[int]:
        previous = 1
        for k, n in enumerate(values, start=1):
            if n < previous:
                raise ValueError(f"n_{k} = {n} breaks monotonicity (normal form has n_0 = 1)")
            previous = n
        return values

    @property
    def K(self) -> int:
        return len(self.values)

    def n(self, k: int) -> int:
        if k <= 0:
            return 1
        return self.values[k - 1]

    @classmethod
    def from_values(cls, values: List[int]) -> "MetaFibSeq":
        return cls(values=list(values))


class Cascade(BaseModel):
    """Maximal constant run n_start = ... = n_(start+length-1), start >= 1."""
    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=1)
    length: int = Field(..., ge=1)
    value: int = Field(..., ge=1)


class GrowthConstant(BaseModel):
    """Root gamma_r in [1, 2) of z^r - z^(r-1) - ... - 1."""
    model_config = ConfigDict(frozen=True)

    r: int = Field(..., ge=1)
    gamma: float = Field(..., ge=1.0, lt=2.0)
    tol: float = Field(..., gt=0)
    residual: float = Field(..., description="|p(root)| at the returned bracket midpoint")


class BoundCheck(BaseModel):
    """Outcome of one of the bound checks."""
    bound: str = Field(..., description="lower | upper | doubling | plateau")
    passed: bool
    first_violation: Optional[int] = Field(None, description="First index k where the claim fails")
    checked: List[int] = Field(default_factory=list, description="Indices the claim was checked at")


class GrowthReport(BaseModel):
    """Empirical constants for n_k ~ const * gamma_R^k."""
    R: int
    gamma: float
    min_ratio: float
    max_ratio: float
    argmin: int
    argmax: int


RSpec.model_rebuild()
