"""
Exact growth bounds for meta-Fibonacci sequences in normal form.

- lower: all cascades of length <= J  =>  n_k >= 2^(k // (J+2))
- upper: r(k+1) <= M r(k) + 1         =>  n_k <= (M+1)^k  and  n_(k+1) <= (M+1) n_k
- doubling: r(k+1) = r(k) + 1          =>  n_(k+1) = 2 n_k
- plateau: n_(k-M) = ... = n_k and r(k+1) = M+1  =>  n_(k+1) = (M+1) n_k
"""

import logging
from typing import List

from errors import PreconditionFailed
from metafib.generator import cascades, infer_r
from metafib.models import BoundCheck, MetaFibSeq, RSpec

logger = logging.getLogger(__name__)


def lower_bound_value(k: int, J: int) -> int:
    return 1 << (k // (J + 2))


def upper_bound_value(k: int, M: int) -> int:
    return (M + 1) ** k


def check_lower_bound(seq: MetaFibSeq, J: int) -> BoundCheck:
    if J < 1:
        raise ValueError(f"J must be positive, got {J}")
    longest = max((c.length for c in cascades(seq)), default=0)
    if longest > J:
        raise PreconditionFailed(f"a cascade of length {longest} exceeds J = {J}",
                                 J=J, cascade_length=longest)

    checked = list(range(1, seq.K + 1))
    for k in checked:
        if seq.n(k) < lower_bound_value(k, J):
            logger.warning(f"lower bound fails at k={k}")
            return BoundCheck(bound="lower", passed=False, first_violation=k, checked=checked)
    return BoundCheck(bound="lower", passed=True, checked=checked)


def check_upper_bound(seq: MetaFibSeq, r: RSpec, M: int) -> BoundCheck:
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    for k in range(0, seq.K):
        if r(k + 1) > M * r(k) + 1:
            raise PreconditionFailed(f"r({k + 1}) = {r(k + 1)} exceeds {M}*r({k}) + 1",
                                     k=k, M=M)

    checked = list(range(1, seq.K + 1))
    for k in checked:
        too_big = seq.n(k) > upper_bound_value(k, M)
        step_too_big = k > 1 and seq.n(k) > (M + 1) * seq.n(k - 1)
        if too_big or step_too_big:
            logger.warning(f"upper bound fails at k={k}")
            return BoundCheck(bound="upper", passed=False, first_violation=k, checked=checked)
    return BoundCheck(bound="upper", passed=True, checked=checked)


def _require_consistent(seq: MetaFibSeq, r: RSpec):
    inferred = infer_r(seq)
    for k in range(1, seq.K + 1):
        if inferred(k) != r(k):
            raise PreconditionFailed(f"sequence has r({k}) = {inferred(k)}, rule says {r(k)}",
                                     k=k)


def check_doubling(seq: MetaFibSeq, r: RSpec) -> BoundCheck:
    _require_consistent(seq, r)

    triggered: List[int] = []
    for k in range(0, seq.K):
        if r(k + 1) == r(k) + 1:
            triggered.append(k)
            if seq.n(k + 1) != 2 * seq.n(k):
                return BoundCheck(bound="doubling", passed=False, first_violation=k,
                                  checked=triggered)
    return BoundCheck(bound="doubling", passed=True, checked=triggered)


def check_plateau_jump(seq: MetaFibSeq, r: RSpec, M: int) -> BoundCheck:
    """Equality case of the one-step upper bound."""
    _require_consistent(seq, r)

    triggered: List[int] = []
    for k in range(1, seq.K):
        flat = all(seq.n(j) == seq.n(k) for j in range(k - M, k))
        if flat and r(k + 1) == M + 1:
            triggered.append(k)
            if seq.n(k + 1) != (M + 1) * seq.n(k):
                return BoundCheck(bound="plateau", passed=False, first_violation=k,
                                  checked=triggered)
    return BoundCheck(bound="plateau", passed=True, checked=triggered)
