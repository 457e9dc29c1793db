"""
Combinatorial Yoccoz puzzles of quadratic polynomials from invariant
co-landing angle cycles.
"""

from yoccoz.angles import Angle, Arc, double, elementary_arcs, parse_angle, preimages, sector, unlinked
from yoccoz.builder import YoccozPuzzleBuilder, build, critical_nest
from yoccoz.lamination import (
    AngleClass,
    Lamination,
    characteristic_arc,
    critical_diameter,
    groupings,
    non_crossing,
    parse_classes,
    pullback,
    validate_seed,
)
from yoccoz.pieces import CombPiece, CombPuzzleLevel, critical_index, critical_piece, piece_dynamics, pieces

__all__ = [
    "Angle",
    "Arc",
    "parse_angle",
    "double",
    "preimages",
    "elementary_arcs",
    "sector",
    "unlinked",
    "AngleClass",
    "parse_classes",
    "validate_seed",
    "groupings",
    "characteristic_arc",
    "critical_diameter",
    "non_crossing",
    "pullback",
    "Lamination",
    "CombPiece",
    "CombPuzzleLevel",
    "pieces",
    "critical_index",
    "critical_piece",
    "piece_dynamics",
    "YoccozPuzzleBuilder",
    "build",
    "critical_nest",
]

__version__ = "1.0.0"
