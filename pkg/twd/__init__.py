"""
Trees with dynamics: validation, ends, first returns, minimal return chains,
periodicity and the meta-Fibonacci structure of return times.
"""

from twd.models import (
    VertexRef,
    ViolationKind,
    Violation,
    ValidationReport,
    FirstReturn,
    ReturnChain,
    PeriodReport,
    GromovDistance
)

from twd.tree import TreeModel
from twd.ends import End, PeriodicEnd, GeneratedEnd, EndTrace, end_vertex
from twd.validator import TreeValidator, validate, check_polynomial_properties
from twd.returns import ReturnAnalyzer, verify_theorem, chain_r_values
from twd.metric import gromov_distance

__all__ = [
    'VertexRef',
    'ViolationKind',
    'Violation',
    'ValidationReport',
    'FirstReturn',
    'ReturnChain',
    'PeriodReport',
    'GromovDistance',
    'TreeModel',
    'End',
    'PeriodicEnd',
    'GeneratedEnd',
    'EndTrace',
    'end_vertex',
    'TreeValidator',
    'validate',
    'check_polynomial_properties',
    'ReturnAnalyzer',
    'verify_theorem',
    'chain_r_values',
    'gromov_distance'
]

__version__ = "1.0.0"
