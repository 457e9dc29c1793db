"""
Variable-r meta-Fibonacci sequences: generation, inversion, bounds and growth constants.
"""

from metafib.models import (
    RKind,
    IndicatorRule,
    RSpec,
    MetaFibSeq,
    Cascade,
    GrowthConstant,
    BoundCheck,
    GrowthReport
)

from metafib.generator import generate, infer_r, cascades

from metafib.bounds import (
    lower_bound_value,
    upper_bound_value,
    check_lower_bound,
    check_upper_bound,
    check_doubling,
    check_plateau_jump
)

from metafib.growth import gamma, growth_report, ratio_to_gamma

__all__ = [
    'RKind',
    'IndicatorRule',
    'RSpec',
    'MetaFibSeq',
    'Cascade',
    'GrowthConstant',
    'BoundCheck',
    'GrowthReport',
    'generate',
    'infer_r',
    'cascades',
    'lower_bound_value',
    'upper_bound_value',
    'check_lower_bound',
    'check_upper_bound',
    'check_doubling',
    'check_plateau_jump',
    'gamma',
    'growth_report',
    'ratio_to_gamma'
]

__version__ = "1.0.0"
