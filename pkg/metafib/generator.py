"""
Generation and inversion of variable-r meta-Fibonacci sequences.

    n_k = n_(k-1) + n_(k-2) + ... + n_(k-r(k)),   n_k = 1 for k <= 0
"""

import logging
from itertools import groupby
from typing import List

from config import METAFIB_CONFIG
from errors import NotMetaFib
from metafib.models import Cascade, MetaFibSeq, RSpec

logger = logging.getLogger(__name__)


def generate(r: RSpec, K: int) -> MetaFibSeq:
    """Compute n_1..n_K exactly; window is [1 - max r(k), K]."""
    if K < 1:
        raise ValueError(f"K must be positive, got {K}")
    if K > METAFIB_CONFIG["max_k"]:
        raise ValueError(f"K = {K} exceeds METAFIB_MAX_K = {METAFIB_CONFIG['max_k']}")

    rs = r.values(K)
    # prefix[m] = n_1 + ... + n_m
    prefix = [0]
    values: List[int] = []
    for k, rk in enumerate(rs, start=1):
        lo = k - rk
        ones = -lo + 1 if lo <= 0 else 0
        n = ones + prefix[k - 1] - prefix[max(lo, 1) - 1]
        values.append(n)
        prefix.append(prefix[-1] + n)

    k_lo = 1 - max(rs)
    logger.debug(f"generated K={K} for {r.kind.value}, window [{k_lo}, {K}]")
    return MetaFibSeq(values=values, k_lo=k_lo, spec=r)


def infer_r(seq: MetaFibSeq) -> RSpec:
    """
    Recover r(k) for k in [1, K] as a table (tail r = 1).

    Raises NotMetaFib at the first k where no number of consecutive
    predecessors sums to n_k.
    """
    entries = {}
    for k in range(1, seq.K + 1):
        target = seq.n(k)
        total = 0
        found = None
        for j in range(1, k):
            total += seq.n(k - j)
            if total == target:
                found = j
                break
            if total > target:
                raise NotMetaFib(k, total - seq.n(k - j), total)
        if found is None:
            # the rest of the history is the all-ones normal form
            found = (k - 1) + (target - total)
        entries[k] = found
    return RSpec.table(entries)


def cascades(seq: MetaFibSeq) -> List[Cascade]:
    """Maximal constant runs of n_1..n_K, in order."""
    runs = []
    start = 1
    for value, group in groupby(seq.values):
        length = sum(1 for _ in group)
        runs.append(Cascade(start=start, length=length, value=value))
        start += length
    return runs
