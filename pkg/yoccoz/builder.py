"""
Combinatorial Yoccoz puzzles assembled into abstract puzzles.
"""

import logging
from typing import Dict, List, Optional, Sequence

from config import YOCCOZ_CONFIG
from errors import NonUniqueCritical
from puzzle.models import AbstractPuzzle, PuzzlePiece
from yoccoz.lamination import AngleClass, Lamination
from yoccoz.pieces import CombPuzzleLevel, critical_index, order_by_parent, piece_dynamics, pieces


class YoccozPuzzleBuilder:
    """
    Builds the levels of a combinatorial puzzle from an invariant seed.

    Depths <= 0 are single pieces, each the image and the parent of the
    next one down; depth-1 pieces are exceptional with f(P) ⊂ P_0.
    """

    def __init__(self, seed: Sequence[AngleClass], max_depth: Optional[int] = None):
        self.max_depth = YOCCOZ_CONFIG["max_depth"] if max_depth is None else max_depth
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be positive, got {self.max_depth}")
        self.lamination = Lamination(seed)
        self.logger = logging.getLogger(__name__)
        self._levels: Dict[int, CombPuzzleLevel] = {}

    def level(self, depth: int) -> CombPuzzleLevel:
        if depth in self._levels:
            return self._levels[depth]
        if depth <= 0:
            built = pieces((), depth)
        else:
            previous = self.level(depth - 1)
            built = pieces(self.lamination.classes(depth), depth)
            piece_dynamics(built, previous)
            order_by_parent(built)
            if previous.depth >= 1:
                parent = built.pieces[critical_index(built)].parent
                if parent != critical_index(previous):
                    raise NonUniqueCritical(f"critical piece of depth {depth} is not inside the previous one",
                                            depth=depth)
            self.logger.debug(f"depth {depth}: {len(built.pieces)} pieces")
        self._levels[depth] = built
        return built

    def levels(self) -> List[CombPuzzleLevel]:
        return [self.level(d) for d in range(-self.max_depth, self.max_depth + 1)]

    def build(self) -> AbstractPuzzle:
        records = []
        for level in self.levels():
            d = level.depth
            for piece in level.pieces:
                pid = level.piece_id(piece.index)
                parent = None if d == -self.max_depth else self.level(d - 1).piece_id(piece.parent or 0)
                if d == 1:
                    records.append(PuzzlePiece(id=pid, depth=d, parent=parent,
                                               exceptional=True, contained_in="P_0"))
                    continue
                if d <= 0:
                    image = None if d == -self.max_depth else f"P_{d - 1}"
                else:
                    image = self.level(d - 1).piece_id(piece.image)
                records.append(PuzzlePiece(id=pid, depth=d, parent=parent, image=image))
        return AbstractPuzzle(window=(-self.max_depth, self.max_depth), pieces=records)

    def critical_nest(self) -> List[str]:
        """Ids of the critical pieces from depth 0 down to max_depth."""
        return ["P_0"] + [self.level(d).critical_piece() for d in range(1, self.max_depth + 1)]


def build(seed: Sequence[AngleClass], max_depth: Optional[int] = None) -> AbstractPuzzle:
    return YoccozPuzzleBuilder(seed, max_depth).build()


def critical_nest(seed: Sequence[AngleClass], max_depth: Optional[int] = None) -> List[str]:
    return YoccozPuzzleBuilder(seed, max_depth).critical_nest()
