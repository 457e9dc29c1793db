"""
Growth constants gamma_r and empirical asymptotic ratios.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

import pandas as pd

from config import METAFIB_CONFIG
from metafib.models import GrowthConstant, GrowthReport, MetaFibSeq

logger = logging.getLogger(__name__)


def _characteristic(z: Fraction, r: int) -> Fraction:
    """z^r - z^(r-1) - ... - z - 1, by Horner on the integer numerator over denominator^r."""
    a, b = z.numerator, z.denominator
    acc, scale = 1, 1
    for _ in range(r):
        scale *= b
        acc = acc * a - scale
    return Fraction(acc, scale)


def gamma(r: int, tol: Optional[float] = None) -> GrowthConstant:
    """
    Bisection on [1, 2] with exact dyadic arithmetic.

    p(1) = 1 - r <= 0 and p(2) = 1 > 0, and p has a single root there.
    Stops once the bracket is narrower than tol and |p(mid)| <= tol.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    tol = METAFIB_CONFIG["gamma_tol"] if tol is None else tol
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    if r == 1:
        return GrowthConstant(r=1, gamma=1.0, tol=tol, residual=0.0)

    bound = Fraction(tol)
    lo, hi = Fraction(1), Fraction(2)
    steps = 0
    while True:
        mid = (lo + hi) / 2
        value = _characteristic(mid, r)
        if hi - lo <= bound and abs(value) <= bound:
            break
        if value > 0:
            hi = mid
        elif value < 0:
            lo = mid
        else:
            break
        steps += 1

    logger.debug(f"gamma_{r} after {steps} bisection steps")
    # gamma_r < 2 exactly, but float(mid) rounds up to 2.0 from r = 53 on
    estimate = min(float(mid), math.nextafter(2.0, 0.0))
    return GrowthConstant(r=r, gamma=estimate, tol=tol, residual=float(abs(value)))


def ratio_to_gamma(seq: MetaFibSeq, r: int, tol: Optional[float] = None) -> float:
    """|n_K / n_(K-1) - gamma_r|, computed exactly then rounded."""
    g = gamma(r, tol).gamma
    return abs(float(Fraction(seq.n(seq.K), seq.n(seq.K - 1))) - g)


def growth_report(seq: MetaFibSeq, R: int, tol: Optional[float] = None) -> GrowthReport:
    """Min and max over k >= 1 of n_k / gamma_R^k (diagnostic only)."""
    g = gamma(R, tol).gamma
    log_g = math.log(g)
    frame = pd.DataFrame({"k": range(1, seq.K + 1)})
    # math.log accepts arbitrarily large ints
    frame["ratio"] = [math.exp(math.log(seq.n(k)) - k * log_g) for k in frame["k"]]

    low = frame.loc[frame["ratio"].idxmin()]
    high = frame.loc[frame["ratio"].idxmax()]
    return GrowthReport(
        R=R,
        gamma=g,
        min_ratio=float(low["ratio"]),
        max_ratio=float(high["ratio"]),
        argmin=int(low["k"]),
        argmax=int(high["k"]),
    )
