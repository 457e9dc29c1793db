"""
First returns, minimal return chains and periodicity of ends.
"""

import logging
from typing import Dict, List, Optional, Sequence

from config import TWD_CONFIG
from errors import (
    AddressOutOfRange,
    BudgetExhausted,
    Inconclusive,
    NonPositiveShift,
    NoReturnWithin,
    PreconditionFailed,
)
from metafib.generator import infer_r
from metafib.models import MetaFibSeq
from twd.ends import End, EndTrace, PeriodicEnd
from twd.models import FirstReturn, PeriodReport, ReturnChain
from twd.tree import TreeModel


class ReturnAnalyzer:
    """
    Return machinery for one model. All operations need H >= 1.

    Each public call builds its own EndTrace, so nothing is cached
    between calls and the analyzer can be shared across threads.
    """

    def __init__(self, model: TreeModel):
        self.model = model
        self.logger = logging.getLogger(__name__)

    def _require_positive_shift(self):
        if self.model.H < 1:
            raise NonPositiveShift(f"return operations need H >= 1, model has H = {self.model.H}",
                                   H=self.model.H)

    # ------------------------------------------------------------ first returns

    def first_return(self, end: End, level: int, n_max: Optional[int] = None) -> FirstReturn:
        self._require_positive_shift()
        n_max = TWD_CONFIG["n_max"] if n_max is None else n_max
        return self._first_return(EndTrace(self.model, end), level, n_max)

    def _first_return(self, trace: EndTrace, level: int, n_max: int) -> FirstReturn:
        H = self.model.H
        v = trace.vertex(level)
        for n in range(1, n_max + 1):
            v = self.model.image(v)
            if trace.vertex(level - n * H) == v:
                return FirstReturn(level=level, n=n, target_level=level - n * H)
        raise NoReturnWithin(level, n_max)

    def returns_after(self, end: End, level: int, n: int) -> bool:
        """Does F^n(x_l) lie on the end?"""
        self._require_positive_shift()
        trace = EndTrace(self.model, end)
        return self.model.iterate(trace.vertex(level), n) == trace.vertex(level - n * self.model.H)

    # ------------------------------------------------------------ chains

    def minimal_return_chain(
        self,
        end: End,
        l0: int = 0,
        K: int = 8,
        n_max: Optional[int] = None,
        k_lo: Optional[int] = None,
        scan_budget: Optional[int] = None,
    ) -> ReturnChain:
        """
        The unique minimal return chain through x_(l0).

        k <= 0: l(k-1) = l(k) - n_k H, following first returns down.
        k > 0: l(k) is the least l whose first return lands on x_(l(k-1)).
        A step that provably has no candidate ends the chain with
        ``nonrecurrent_at``; a step that runs out of budget raises
        BudgetExhausted carrying the partial chain.
        """
        self._require_positive_shift()
        if K < 0:
            raise ValueError(f"K must be non-negative, got {K}")
        n_max = TWD_CONFIG["n_max"] if n_max is None else n_max
        k_lo = TWD_CONFIG["k_lo"] if k_lo is None else k_lo
        scan_budget = TWD_CONFIG["scan_budget"] if scan_budget is None else scan_budget
        if k_lo > 0:
            raise ValueError(f"k_lo must be <= 0, got {k_lo}")

        trace = EndTrace(self.model, end)

        # backward: levels[i] is l(k_lo + i) once reversed
        down_levels = [l0]
        down_times = []
        for _ in range(0, k_lo - 1, -1):
            step = self._first_return(trace, down_levels[-1], n_max)
            down_times.append(step.n)
            down_levels.append(step.target_level)
        down_levels.pop()
        levels: List[int] = list(reversed(down_levels))
        times: List[int] = list(reversed(down_times))

        bound = self.model.return_search_bound(end)
        for k in range(1, K + 1):
            target = levels[-1]
            found = None
            last = target + scan_budget
            if self.model.max_level is not None:
                last = min(last, self.model.max_level)
            proven = bound is not None and bound <= last
            if proven:
                last = bound
            for candidate in range(target + 1, last + 1):
                try:
                    step = self._first_return(trace, candidate, n_max)
                except (NoReturnWithin, AddressOutOfRange) as e:
                    partial = ReturnChain(k_lo=k_lo, levels=levels, times=times)
                    raise BudgetExhausted(f"step k={k} stopped at level {candidate}: {e}",
                                          partial=partial, k=k) from e
                if step.target_level == target:
                    found = step
                    break

            if found is None and proven:
                self.logger.debug(f"x_{target} is never a first-return target (searched to {bound})")
                return ReturnChain(k_lo=k_lo, levels=levels, times=times, nonrecurrent_at=k - 1)

            if found is None:
                partial = ReturnChain(k_lo=k_lo, levels=levels, times=times)
                self.logger.warning(f"no level in ({target}, {last}] first-returns onto x_{target}")
                raise BudgetExhausted(f"step k={k}: no level up to {last} returns onto level {target}",
                                      partial=partial, k=k)

            self.logger.debug(f"l({k}) = {found.level}, n_{k} = {found.n}")
            levels.append(found.level)
            times.append(found.n)

        return ReturnChain(k_lo=k_lo, levels=levels, times=times)

    def is_return_chain(self, end: End, levels: Sequence[int], n_max: Optional[int] = None) -> bool:
        """True iff each x_(l(k)) first-returns exactly onto x_(l(k-1))."""
        self._require_positive_shift()
        n_max = TWD_CONFIG["n_max"] if n_max is None else n_max
        trace = EndTrace(self.model, end)
        for lower, upper in zip(levels, levels[1:]):
            if upper <= lower:
                return False
            try:
                step = self._first_return(trace, upper, n_max)
            except NoReturnWithin:
                return False
            if step.target_level != lower:
                return False
        return True

    # ------------------------------------------------------------ periodicity

    def detect_period(
        self,
        end: End,
        l_probe: Optional[int] = None,
        n_max: Optional[int] = None,
        window: Optional[int] = None,
    ) -> PeriodReport:
        """
        Minimal N with F^N fixing the end, certified by first return
        times equal to N at every level of [l_probe, l_probe + window).
        For eventually periodic addresses the window starts l_probe levels
        past the preperiod, so a long preperiod cannot pass for a period.
        """
        self._require_positive_shift()
        l_probe = TWD_CONFIG["period_probe"] if l_probe is None else l_probe
        if isinstance(end, PeriodicEnd):
            l_probe += len(end.normalized().preperiod)
        n_max = TWD_CONFIG["n_max"] if n_max is None else n_max
        window = TWD_CONFIG["period_window"] if window is None else window

        trace = EndTrace(self.model, end)
        times = []
        for level in range(l_probe, l_probe + window):
            try:
                times.append(self._first_return(trace, level, n_max).n)
            except NoReturnWithin as e:
                raise Inconclusive(f"no return at level {level} within {n_max} iterates",
                                   level=level, n_max=n_max) from e

        period = times[0] if times and len(set(times)) == 1 else None
        return PeriodReport(period=period, probe_level=l_probe, times=times)

    def check_ancestor_returns(self, end: End, level: int, n: int, depth: int) -> bool:
        """If F^n(x_l) returns, so does F^n(x_m) for every m < l down to -depth."""
        if not self.returns_after(end, level, n):
            raise PreconditionFailed(f"F^{n}(x_{level}) does not return", level=level, n=n)
        trace = EndTrace(self.model, end)
        H = self.model.H
        for m in range(level - 1, -depth - 1, -1):
            if self.model.iterate(trace.vertex(m), n) != trace.vertex(m - n * H):
                return False
        return True


def verify_theorem(chain: ReturnChain) -> Dict[int, int]:
    """
    r(k) for the chain's return times, keyed by chain index.

    Times below the window are taken to be 1. When the chain's k <= 0
    part is not all ones yet, the table starts right after the bottom
    run of ones instead of at k = 1; r = 1 for every index before it.
    """
    if not chain.times or chain.times[0] != 1:
        raise PreconditionFailed("the lowest time of the window must be 1", k=chain.k_lo)

    ones = 0
    while ones < len(chain.times) and chain.times[ones] == 1:
        ones += 1
    # last index of the bottom run of ones, or 0 if the run covers k <= 0
    shift = min(chain.k_lo + ones - 1, 0)
    values = [chain.time(k) for k in range(shift + 1, chain.K + 1)]
    if not values:
        return {}
    table = infer_r(MetaFibSeq.from_values(values))
    return {j + shift: table(j) for j in range(1, len(values) + 1)}


def chain_r_values(chain: ReturnChain) -> List[int]:
    """r(k) for k = k_lo .. K."""
    table = verify_theorem(chain)
    return [table.get(k, 1) for k in chain.indices()]
